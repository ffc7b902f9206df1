use std::fmt::Write;

use crate::presentation::Presentation;

use super::Quiver;

/// How arrows are named in DOT output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ArrowNaming {
    /// The arrow's own name (its defining word for Ufnarovskii graphs).
    #[default]
    Payload,
    /// The generator label; falls back to the arrow name when unlabeled.
    Label,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering with vertices and arrows in id order.
pub fn to_dot(q: &Quiver, naming: ArrowNaming, alphabet: Option<&Presentation>) -> String {
    let mut out = String::from("digraph Q {\n");
    for v in q.vertices() {
        writeln!(out, "  {};", quote(&v.name)).unwrap();
    }
    for a in q.arrows() {
        let name = match (naming, a.label, alphabet) {
            (ArrowNaming::Label, Some(x), Some(p)) => p.generators()[x].name.clone(),
            _ => a.name.clone(),
        };
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(&q.vertex(a.source).name),
            quote(&q.vertex(a.target).name),
            quote(&name)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
