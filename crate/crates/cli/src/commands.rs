use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use ufn_core::hom::kernel_dimensions;
use ufn_core::pathalg::{compare_up_to_transpose, to_dot, Comparison};
use ufn_core::presentation::PresentationDoc;
use ufn_core::veronese::DEGREE_ZERO_NOTE;
use ufn_core::{
    build_ufnarovskii, kernel_generators, lr_rl_pair, quiver_from_matrix, quiver_to_presentation,
    verify_presentation, veronese_presentation, veronese_ufn_graph, ArrowNaming, Error,
    Homomorphism, NatMatrix, Presentation, Quiver, QuiverInput,
};

use crate::render;
use crate::{Cli, Command, Format, GraphOpts, HomOpts, Then, VeroneseOpts};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String, std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    /// 2 for bad input, 3 for a resource guard.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_guard() => 3,
            _ => 2,
        }
    }
}

pub struct Outcome {
    pub stdout: String,
    pub stderr: Option<String>,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: None,
            code: 0,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn load_presentation(cli: &Cli, path: &Path) -> Result<Presentation> {
    Ok(Presentation::from_json(&read(path)?)?.with_enumeration_bound(cli.guard))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Graph { input, opts } => cmd_graph(cli, &load_presentation(cli, input)?, opts),
        Command::Hom { input, opts } => cmd_hom(cli, &load_presentation(cli, input)?, opts),
        Command::Kernel { input } => cmd_kernel(cli, &load_presentation(cli, input)?),
        Command::Verify { input } => cmd_verify(cli, &load_presentation(cli, input)?),
        Command::Veronese { input, opts } => {
            cmd_veronese(cli, &load_presentation(cli, input)?, opts)
        }
        Command::Lrrl {
            left,
            right,
            reference_lr,
            reference_rl,
        } => cmd_lrrl(
            cli,
            left,
            right,
            reference_lr.as_deref(),
            reference_rl.as_deref(),
        ),
        Command::FromQuiver { quiver, then } => {
            let qi = QuiverInput::from_json(&read(quiver)?)?;
            let p = quiver_to_presentation(&qi)?.with_enumeration_bound(cli.guard);
            match then.as_ref().unwrap_or(&Then::Presentation) {
                Then::Presentation => cmd_presentation(cli, &p),
                Then::Graph(opts) => cmd_graph(cli, &p, opts),
                Then::Hom(opts) => cmd_hom(cli, &p, opts),
                Then::Kernel => cmd_kernel(cli, &p),
                Then::Verify => cmd_verify(cli, &p),
                Then::Veronese(opts) => cmd_veronese(cli, &p, opts),
            }
        }
    }
}

fn cmd_presentation(cli: &Cli, p: &Presentation) -> Result<Outcome> {
    #[derive(Serialize)]
    struct Out<'a> {
        #[serde(flatten)]
        doc: PresentationDoc,
        note: &'a str,
    }
    Ok(Outcome::ok(match cli.format.unwrap_or(Format::Json) {
        Format::Text => format!("{}note: {DEGREE_ZERO_NOTE}\n", render::presentation_text(p)),
        _ => to_json(&Out {
            doc: p.to_doc(),
            note: DEGREE_ZERO_NOTE,
        }),
    }))
}

fn cmd_graph(cli: &Cli, p: &Presentation, opts: &GraphOpts) -> Result<Outcome> {
    let graph = build_ufnarovskii(p)?;
    let naming = if opts.labels {
        ArrowNaming::Label
    } else {
        ArrowNaming::Payload
    };
    Ok(Outcome::ok(match cli.format.unwrap_or(Format::Dot) {
        Format::Dot => graph.to_dot(naming),
        Format::Json => to_json(&json!({ "ell": p.ell(), "quiver": graph.to_doc() })),
        Format::Text => render::graph_text(&graph),
    }))
}

fn cmd_hom(cli: &Cli, p: &Presentation, opts: &HomOpts) -> Result<Outcome> {
    let graph = build_ufnarovskii(p)?;
    let f = Homomorphism::new(&graph);
    let word = opts.word.as_deref().map(|w| p.parse_word(w)).transpose()?;
    Ok(Outcome::ok(match cli.format.unwrap_or(Format::Text) {
        Format::Json => {
            let letters: Vec<Value> = p
                .generators()
                .iter()
                .map(|g| json!({ "letter": g.name, "arrows": render::arrow_names(&graph, f.f_letter(g.index)) }))
                .collect();
            let mut out = json!({ "ell": p.ell(), "letters": letters });
            if let Some(w) = &word {
                out["word"] = json!({ "word": p.render(w), "paths": render::path_lists(&graph, &f.f_word(w)) });
            }
            to_json(&out)
        }
        _ => {
            let mut s = String::new();
            for g in p.generators() {
                s += &format!(
                    "f({}) = {}\n",
                    g.name,
                    render::sum_text(&graph, f.f_letter(g.index))
                );
            }
            if let Some(w) = &word {
                s += &format!(
                    "f({}) = {}\n",
                    p.render(w),
                    render::sum_text(&graph, &f.f_word(w))
                );
            }
            s
        }
    }))
}

fn cmd_kernel(cli: &Cli, p: &Presentation) -> Result<Outcome> {
    let graph = build_ufnarovskii(p)?;
    let kernel = kernel_generators(&graph)?;
    let dims = kernel_dimensions(p, &kernel, cli.max_degree, cli.exec())?;
    Ok(Outcome::ok(match cli.format.unwrap_or(Format::Text) {
        Format::Json => {
            let s: Vec<Value> = kernel
                .words()
                .iter()
                .map(|k| json!({ "word": p.encode_word(&k.word), "legal": k.legal }))
                .collect();
            to_json(&json!({ "ell": p.ell(), "kernel_set": s, "dimensions": dims }))
        }
        _ => render::kernel_text(p, &kernel, &dims),
    }))
}

fn cmd_verify(cli: &Cli, p: &Presentation) -> Result<Outcome> {
    let report = verify_presentation(p, cli.max_degree, cli.exec())?;
    let stdout = match cli.format.unwrap_or(Format::Json) {
        Format::Text => render::verify_text(&report),
        _ => to_json(&report),
    };
    let failure = report.first_failure().map(|c| {
        format!(
            "check `{}` failed: {}",
            c.check,
            c.counterexample
                .as_deref()
                .unwrap_or("no counterexample recorded")
        )
    });
    Ok(Outcome {
        stdout,
        code: if failure.is_some() { 1 } else { 0 },
        stderr: failure,
    })
}

fn cmd_veronese(cli: &Cli, p: &Presentation, opts: &VeroneseOpts) -> Result<Outcome> {
    let aliases = (!cli.alias.is_empty()).then_some(cli.alias.as_slice());
    let vp = veronese_presentation(p, opts.n, aliases)?;
    let graph = veronese_ufn_graph(&vp)?;
    let hilbert = vp.hilbert_agreement(cli.max_degree);
    let stdout = match cli.format.unwrap_or(Format::Text) {
        Format::Dot => graph.to_dot(ArrowNaming::Payload),
        Format::Json => {
            let blocks: Vec<Value> = vp
                .block_letters()
                .iter()
                .zip(vp.presentation().generator_names())
                .map(|(b, name)| json!({ "generator": name, "block": p.encode_word(b) }))
                .collect();
            to_json(&json!({
                "n": vp.n(),
                "presentation": vp.presentation().to_doc(),
                "blocks": blocks,
                "graph": graph.to_doc(),
                "hilbert": hilbert,
            }))
        }
        Format::Text => render::veronese_text(&vp, &graph, &hilbert),
    };
    let failed = !hilbert.report.passed;
    Ok(Outcome {
        stdout,
        stderr: failed.then(|| {
            format!(
                "Hilbert agreement failed: {:?}",
                hilbert.report.counterexample
            )
        }),
        code: if failed { 1 } else { 0 },
    })
}

fn load_reference(cli: &Cli, path: &Path) -> Result<Quiver> {
    let text = read(path)?;
    let value: Value = serde_json::from_str(&text).map_err(Error::from)?;
    if value.is_array() {
        return Ok(quiver_from_matrix(&NatMatrix::from_json(&text)?)?);
    }
    if value.get("generators").is_some() {
        let p = Presentation::from_json(&text)?.with_enumeration_bound(cli.guard);
        return Ok(build_ufnarovskii(&p)?.quiver().clone());
    }
    Ok(QuiverInput::from_json(&text)?.quiver().clone())
}

fn cmd_lrrl(
    cli: &Cli,
    left: &Path,
    right: &Path,
    ref_lr: Option<&Path>,
    ref_rl: Option<&Path>,
) -> Result<Outcome> {
    let l = NatMatrix::from_json(&read(left)?)?;
    let r = NatMatrix::from_json(&read(right)?)?;
    let (q_lr, q_rl) = lr_rl_pair(&l, &r)?;
    let compare = |reference: Option<&Path>, q: &Quiver| -> Result<Option<Comparison>> {
        reference
            .map(|path| {
                Ok(compare_up_to_transpose(
                    q,
                    &load_reference(cli, path)?,
                    cli.vertex_bound,
                )?)
            })
            .transpose()
    };
    let cmp_lr = compare(ref_lr, &q_lr)?;
    let cmp_rl = compare(ref_rl, &q_rl)?;
    Ok(Outcome::ok(match cli.format.unwrap_or(Format::Text) {
        Format::Dot => format!(
            "{}{}",
            to_dot(&q_lr, ArrowNaming::Payload, None),
            to_dot(&q_rl, ArrowNaming::Payload, None)
        ),
        Format::Json => to_json(&json!({
            "lr": { "matrix": q_lr.incidence(), "quiver": q_lr.to_doc(None), "comparison": cmp_lr },
            "rl": { "matrix": q_rl.incidence(), "quiver": q_rl.to_doc(None), "comparison": cmp_rl },
        })),
        Format::Text => render::lrrl_text(&q_lr, &q_rl, cmp_lr.as_ref(), cmp_rl.as_ref()),
    }))
}
