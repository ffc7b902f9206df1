//! Plain-text renderings. Every listing follows the library's own order,
//! so output is stable from run to run.

use std::fmt::Write;

use ufn_core::hom::{DegreeDims, KernelData};
use ufn_core::pathalg::Comparison;
use ufn_core::veronese::{HilbertAgreement, HilbertRow};
use ufn_core::{
    Path, PathSum, Presentation, Quiver, UfnarovskiiGraph, VerifyReport, VeronesePresentation,
};

fn arrow_symbol(q: &Quiver, a: usize) -> String {
    format!("a_{{{}}}", q.arrow(a).name)
}

fn path_symbol(q: &Quiver, path: &Path) -> String {
    if path.is_trivial() {
        return format!("e_{{{}}}", q.vertex(path.source()).name);
    }
    path.arrows().iter().map(|&a| arrow_symbol(q, a)).collect()
}

/// Arrow names in the support of a degree-one sum.
pub fn arrow_names(graph: &UfnarovskiiGraph, sum: &PathSum) -> Vec<String> {
    let q = graph.quiver();
    sum.support()
        .flat_map(|p| p.arrows().iter().map(|&a| q.arrow(a).name.clone()))
        .collect()
}

/// Each supporting path as its list of arrow names.
pub fn path_lists(graph: &UfnarovskiiGraph, sum: &PathSum) -> Vec<Vec<String>> {
    let q = graph.quiver();
    sum.support()
        .map(|p| {
            p.arrows()
                .iter()
                .map(|&a| q.arrow(a).name.clone())
                .collect()
        })
        .collect()
}

/// `a_{xx} + a_{xy}`, or `0`.
pub fn sum_text(graph: &UfnarovskiiGraph, sum: &PathSum) -> String {
    if sum.is_zero() {
        return "0".into();
    }
    let q = graph.quiver();
    let mut s = String::new();
    for (i, (path, &c)) in sum.terms().enumerate() {
        let sign = if c < 0 { "-" } else { "+" };
        if i == 0 {
            if c < 0 {
                s.push('-');
            }
        } else {
            let _ = write!(s, " {sign} ");
        }
        if c.abs() != 1 {
            let _ = write!(s, "{}", c.abs());
        }
        s += &path_symbol(q, path);
    }
    s
}

pub fn presentation_text(p: &Presentation) -> String {
    let relations: Vec<String> = p.forbidden().iter().map(|w| p.render(w)).collect();
    format!(
        "generators: {}\nrelations: {}\nell: {}\n",
        p.generator_names().join(" "),
        if relations.is_empty() {
            "(none)".to_string()
        } else {
            relations.join(" ")
        },
        p.ell()
    )
}

fn quiver_text(q: &Quiver, p: Option<&Presentation>) -> String {
    let mut s = String::new();
    let names: Vec<&str> = q.vertices().iter().map(|v| v.name.as_str()).collect();
    let _ = writeln!(s, "vertices ({}): {}", names.len(), names.join(" "));
    let _ = writeln!(s, "arrows ({}):", q.num_arrows());
    for a in q.arrows() {
        let _ = write!(
            s,
            "  {}: {} -> {}",
            a.name,
            q.vertex(a.source).name,
            q.vertex(a.target).name
        );
        if let (Some(x), Some(p)) = (a.label, p) {
            let _ = write!(s, " [{}]", p.generator_names()[x]);
        }
        s.push('\n');
    }
    s
}

pub fn graph_text(graph: &UfnarovskiiGraph) -> String {
    format!(
        "ell: {}\n{}",
        graph.ell(),
        quiver_text(graph.quiver(), Some(graph.presentation()))
    )
}

pub fn kernel_text(p: &Presentation, kernel: &KernelData, dims: &[DegreeDims]) -> String {
    let mut s = format!("ell: {}\n", p.ell());
    if kernel.is_empty() {
        s += "kernel set: (empty)\n";
    } else {
        let members: Vec<String> = kernel
            .words()
            .iter()
            .map(|k| {
                format!(
                    "{}{}",
                    p.render(&k.word),
                    if k.legal { "" } else { " (illegal)" }
                )
            })
            .collect();
        let _ = writeln!(s, "kernel set: {}", members.join(", "));
    }
    s += "degree  dim  kernel  image\n";
    for d in dims {
        let _ = writeln!(
            s,
            "{:>6}  {:>3}  {:>6}  {:>5}",
            d.degree, d.dim, d.kernel, d.image
        );
    }
    s
}

pub fn verify_text(report: &VerifyReport) -> String {
    let mut s = format!(
        "ell: {} (normalized {}), degrees up to {}\n",
        report.ell, report.normalized_ell, report.max_degree
    );
    for c in &report.checks {
        let counts: Vec<String> = c.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = write!(
            s,
            "{} {} [{}..{}] {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.check,
            c.degree_range[0],
            c.degree_range[1],
            counts.join(" ")
        );
        if let Some(w) = &c.counterexample {
            let _ = write!(s, " counterexample: {w}");
        }
        s.push('\n');
    }
    let _ = writeln!(
        s,
        "{}",
        if report.passed {
            "all checks passed"
        } else {
            "verification failed"
        }
    );
    s
}

pub fn veronese_text(
    vp: &VeronesePresentation,
    graph: &UfnarovskiiGraph,
    hilbert: &HilbertAgreement,
) -> String {
    let base = vp.base();
    let v = vp.presentation();
    let mut s = format!("veronese n = {}\n", vp.n());
    s += "blocks:";
    for (name, block) in v.generator_names().iter().zip(vp.block_letters()) {
        let _ = write!(s, " {name}={}", base.render(block));
    }
    s.push('\n');
    s += &presentation_text(v);
    s += &quiver_text(graph.quiver(), Some(v));
    let width = |col: &dyn Fn(&HilbertRow) -> String, title: &str| {
        hilbert
            .rows
            .iter()
            .map(|r| col(r).len())
            .chain([title.len()])
            .max()
            .unwrap_or(0)
    };
    let wm = width(&|r| r.m.to_string(), "m");
    let wv = width(&|r| r.veronese.clone(), "veronese");
    let wb = width(&|r| r.base.clone(), "base");
    let _ = writeln!(
        s,
        "hilbert:\n  {:>wm$}  {:>wv$}  {:>wb$}",
        "m", "veronese", "base"
    );
    for row in &hilbert.rows {
        let _ = writeln!(
            s,
            "  {:>wm$}  {:>wv$}  {:>wb$}",
            row.m, row.veronese, row.base
        );
    }
    s
}

fn matrix_text(q: &Quiver) -> String {
    let m = q.incidence();
    let mut s = String::new();
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        let _ = writeln!(s, "  [{}]", cells.join(", "));
    }
    s
}

fn comparison_text(c: Option<&Comparison>) -> String {
    let Some(c) = c else {
        return "reference: none\n".into();
    };
    let map = |m: &Option<Vec<usize>>| match m {
        Some(v) => format!("{v:?}"),
        None => "none".into(),
    };
    format!(
        "match: {}\n  direct: {}\n  transposed: {}\n",
        serde_json::to_value(c.variant)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default(),
        map(&c.direct),
        map(&c.transposed)
    )
}

pub fn lrrl_text(
    lr: &Quiver,
    rl: &Quiver,
    cmp_lr: Option<&Comparison>,
    cmp_rl: Option<&Comparison>,
) -> String {
    let mut s = String::new();
    for (title, q, c) in [("LR", lr, cmp_lr), ("RL", rl, cmp_rl)] {
        let _ = writeln!(s, "{title} incidence:");
        s += &matrix_text(q);
        s += &quiver_text(q, None);
        s += &comparison_text(c);
    }
    s
}
