//! Runs every exhaustive check against one presentation.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::hom::{
    kernel_dimensions, kernel_generators, verify_cokernel_stability, verify_images,
    verify_kernel_annihilation, verify_relations_killed, Homomorphism, KernelData, SweepOptions,
};
use crate::pathalg::{hilbert_tail_check, Path};
use crate::presentation::{is_legal_by_scan, Presentation, Word, DEAD};
use crate::report::{CheckReport, VerifyReport};
use crate::ufngraph::{build_ufnarovskii, UfnarovskiiGraph};

/// Builds the graph and runs every check for degrees up to `max_degree`.
pub fn verify_presentation(
    p: &Presentation,
    max_degree: usize,
    exec: Exec,
) -> Result<VerifyReport> {
    let candidates = BigUint::from(p.num_generators()).pow(max_degree as u32);
    if candidates > BigUint::from(p.enumeration_bound()) {
        return Err(Error::EnumerationGuard {
            length: max_degree,
            candidates: candidates.to_string(),
            bound: p.enumeration_bound(),
        });
    }
    let graph = build_ufnarovskii(p)?;
    let kernel = kernel_generators(&graph)?;
    let hom = Homomorphism::new(&graph);
    // the path sweep materializes nothing, but image dimensions list L_r
    for r in 0..=max_degree {
        p.check_guard(r)?;
    }

    let groups: Vec<Vec<CheckReport>> = exec.map_range(6, |group| match group {
        0 => all_words_checks(&graph, max_degree, exec),
        1 => vec![
            graph_structure(&graph),
            word_path_bijection(&graph, max_degree, exec),
        ],
        2 => {
            let mut v = vec![hilbert_tail_check(p, &graph, max_degree, exec).report];
            if p.forbidden().is_empty() {
                v.push(free_algebra_count(p, max_degree));
            }
            v
        }
        3 => verify_images(&hom, &kernel, max_degree, SweepOptions::default(), exec),
        4 => vec![
            verify_relations_killed(&hom),
            verify_kernel_annihilation(&kernel, &hom),
            verify_cokernel_stability(&hom),
        ],
        _ => vec![image_dimension(&graph, &kernel, max_degree, exec)],
    });
    let checks: Vec<CheckReport> = groups.into_iter().flatten().collect();
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        generators: p.generator_names().iter().map(|s| s.to_string()).collect(),
        relations: p.forbidden().iter().map(|w| p.render(w)).collect(),
        ell: p.ell(),
        normalized_ell: p.normalized_ell(),
        max_degree,
        checks,
        passed,
    })
}

#[derive(Default)]
struct WordTally {
    scan: CheckReport,
    normalized: CheckReport,
    closure: CheckReport,
    illegal_unlabeled: CheckReport,
    criterion: CheckReport,
    suffix: CheckReport,
}

impl Default for CheckReport {
    fn default() -> Self {
        CheckReport::new("", 0, 0)
    }
}

fn absorb(into: CheckReport, other: CheckReport) -> CheckReport {
    let mut out = into;
    for (k, v) in other.counts {
        out = out.count(&k, v);
    }
    match other.counterexample {
        Some(c) if !other.passed => out.fail(c),
        _ => out,
    }
}

/// Sweeps every word (legal or not) of length `1..=max_len`:
///
/// * the factor automaton agrees with a plain factor scan, against both the
///   given and the normalized relations;
/// * factors of legal words are legal;
/// * illegal words label no path;
/// * a path labeled `u` exists iff `u v` is legal for some `v` in `L_ell`,
///   three ways: label walk, automaton extension, explicit scan of `L_ell`;
/// * for legal `u` with `|u| >= ell`, that existence depends only on the
///   last `ell` letters.
fn all_words_checks(graph: &UfnarovskiiGraph, max_len: usize, exec: Exec) -> Vec<CheckReport> {
    let p = graph.presentation();
    let tails = p.legal_words(p.ell()).unwrap_or_default();
    let tallies = exec.map_range(p.num_generators(), |x| {
        let mut tally = WordTally::default();
        if max_len > 0 {
            let mut word = Word::letter(x);
            let state = p.automaton_step_raw(p.automaton_start(), x);
            all_words_visit(graph, &tails, state, &mut word, max_len, &mut tally);
        }
        tally
    });
    let mut merged = WordTally::default();
    for t in tallies {
        merged.scan = absorb(merged.scan, t.scan);
        merged.normalized = absorb(merged.normalized, t.normalized);
        merged.closure = absorb(merged.closure, t.closure);
        merged.illegal_unlabeled = absorb(merged.illegal_unlabeled, t.illegal_unlabeled);
        merged.criterion = absorb(merged.criterion, t.criterion);
        merged.suffix = absorb(merged.suffix, t.suffix);
    }
    let name = |mut r: CheckReport, n: &str, lo: usize| {
        r.check = n.to_string();
        r.degree_range = [lo.min(max_len), max_len];
        r
    };
    vec![
        name(merged.scan, "legality-automaton-vs-scan", 1),
        name(merged.normalized, "normalization-soundness", 1),
        name(merged.closure, "factor-closure", 1),
        name(merged.illegal_unlabeled, "illegal-words-label-no-path", 1),
        name(merged.criterion, "labeled-path-criterion", 1),
        name(merged.suffix, "labeled-path-suffix-reduction", p.ell()),
    ]
}

fn all_words_visit(
    graph: &UfnarovskiiGraph,
    tails: &[Word],
    state: u32,
    word: &mut Word,
    max_len: usize,
    t: &mut WordTally,
) {
    let p = graph.presentation();
    let ell = p.ell();
    let legal = state != DEAD;
    let w = &*word;
    let fail = |r: CheckReport, ok: bool| {
        let r = r.count("checked", 1);
        if ok {
            r
        } else {
            r.fail(p.render(w))
        }
    };

    let scan = is_legal_by_scan(w, p.forbidden());
    t.scan = fail(
        std::mem::take(&mut t.scan),
        legal == scan && legal == p.is_legal(w),
    );
    t.normalized = fail(
        std::mem::take(&mut t.normalized),
        scan == is_legal_by_scan(w, p.normalized_forbidden()),
    );
    if legal {
        let ok = p.is_legal(&w.slice(1, w.len())) && p.is_legal(&w.prefix(w.len() - 1));
        t.closure = fail(std::mem::take(&mut t.closure), ok);
    }
    let walked = !graph.paths_with_label(w).is_empty();
    if !legal {
        t.illegal_unlabeled = fail(std::mem::take(&mut t.illegal_unlabeled), !walked);
    }
    let extended = graph.path_exists_labeled(w);
    let scanned = legal
        && tails.iter().any(|v| {
            v.letters()
                .iter()
                .fold(state, |s, &x| p.automaton_step_raw(s, x))
                != DEAD
        });
    t.criterion = fail(
        std::mem::take(&mut t.criterion),
        walked == extended && walked == scanned,
    );
    if legal && w.len() >= ell {
        t.suffix = fail(
            std::mem::take(&mut t.suffix),
            extended == graph.path_exists_labeled(&w.suffix(ell)),
        );
    }

    if word.len() == max_len {
        return;
    }
    for x in 0..p.num_generators() {
        word.push(x);
        all_words_visit(
            graph,
            tails,
            p.automaton_step_raw(state, x),
            word,
            max_len,
            t,
        );
        word.pop();
    }
}

/// Vertices are `L_ell`, arrows `L_{ell+1}`, at most one arrow per ordered
/// pair, labels are first letters; with no relations every vertex has
/// out-degree `|G|`.
fn graph_structure(graph: &UfnarovskiiGraph) -> CheckReport {
    let p = graph.presentation();
    let q = graph.quiver();
    let ell = p.ell();
    let mut r = CheckReport::new("graph-structure", ell, ell + 1)
        .count("vertices", q.num_vertices() as u64)
        .count("arrows", q.num_arrows() as u64);
    let vertex_words: Vec<&Word> = q
        .vertices()
        .iter()
        .filter_map(|v| v.payload.as_ref())
        .collect();
    let arrow_words: Vec<&Word> = q
        .arrows()
        .iter()
        .filter_map(|a| a.payload.as_ref())
        .collect();
    let l_ell = p.legal_words(ell).unwrap_or_default();
    let l_next = p.legal_words(ell + 1).unwrap_or_default();
    if vertex_words != l_ell.iter().collect::<Vec<_>>() {
        r = r.fail("vertex payloads differ from L_ell");
    }
    if arrow_words != l_next.iter().collect::<Vec<_>>() {
        r = r.fail("arrow payloads differ from L_{ell+1}");
    }
    let incidence = q.incidence();
    if (0..q.num_vertices()).any(|u| incidence.row(u).iter().any(|&c| c > 1)) {
        r = r.fail("parallel arrows");
    }
    for a in q.arrows() {
        let payload = a.payload.as_ref().expect("payload");
        let ok = a.label == payload.first()
            && graph.vertex_word(a.source) == &payload.prefix(ell)
            && graph.vertex_word(a.target) == &payload.suffix(ell);
        if !ok {
            r = r.fail(format!("arrow {}", a.name));
        }
    }
    if p.forbidden().is_empty() {
        let g = p.num_generators();
        let de_bruijn = q.num_vertices() == g.pow(ell as u32)
            && (0..q.num_vertices()).all(|v| q.out_arrows(v).len() == g);
        if !de_bruijn {
            r = r.fail("free algebra graph is not de Bruijn");
        }
    }
    r
}

/// Every path of length `n` spells a legal word of length `n + ell` that
/// maps back to the same path, and the number of such paths equals
/// `|L_{n+ell}|`; together these make the correspondence a bijection. Runs
/// over words of length `ell..=max_len`.
fn word_path_bijection(graph: &UfnarovskiiGraph, max_word_len: usize, exec: Exec) -> CheckReport {
    let p = graph.presentation();
    let q = graph.quiver();
    let mut r = CheckReport::new(
        "word-path-bijection",
        p.ell().min(max_word_len),
        max_word_len,
    );
    let Some(max_len) = max_word_len.checked_sub(p.ell()) else {
        return r.count("paths", 0);
    };
    let per_vertex = exec.map_range(q.num_vertices(), |v| {
        let mut counts = vec![0u64; max_len + 1];
        let mut failure = None;
        let mut stack = vec![Path::trivial(v)];
        while let Some(path) = stack.pop() {
            counts[path.len()] += 1;
            let w = graph.path_to_word(&path);
            let ok = w.len() == path.len() + p.ell()
                && p.is_legal(&w)
                && graph.word_to_path(&w).ok().as_ref() == Some(&path);
            if !ok && failure.is_none() {
                failure = Some(p.render(&w));
            }
            if path.len() < max_len {
                for &a in q.out_arrows(path.target()).iter().rev() {
                    stack.push(path.then_arrow(q, a).expect("out arrow composes"));
                }
            }
        }
        (counts, failure)
    });
    let mut totals = vec![0u64; max_len + 1];
    for (counts, failure) in per_vertex {
        for (t, c) in totals.iter_mut().zip(counts) {
            *t += c;
        }
        if let Some(w) = failure {
            r = r.fail(w);
        }
    }
    for (n, &t) in totals.iter().enumerate() {
        let words = p.count_legal_words(n + p.ell());
        if BigUint::from(t) != words {
            r = r.fail(format!("n={n}: {t} paths, {words} legal words"));
        }
    }
    r.count("paths", totals.iter().sum())
}

fn free_algebra_count(p: &Presentation, max_len: usize) -> CheckReport {
    let mut r = CheckReport::new("free-algebra-count", 0, max_len);
    for n in 0..=max_len {
        if p.count_legal_words(n) != BigUint::from(p.num_generators()).pow(n as u32) {
            r = r.fail(format!("degree {n}"));
        }
    }
    r.count("degrees", max_len as u64 + 1)
}

/// Per degree, the image dimension from the suffix criterion equals the
/// number of legal words that label a path.
fn image_dimension(
    graph: &UfnarovskiiGraph,
    kernel: &KernelData,
    max_len: usize,
    exec: Exec,
) -> CheckReport {
    let p = graph.presentation();
    let mut r = CheckReport::new("image-dimension", 0, max_len);
    let dims = match kernel_dimensions(p, kernel, max_len, exec) {
        Ok(d) => d,
        Err(e) => return r.fail(e.to_string()),
    };
    for d in &dims {
        let labeled = if d.degree == 0 {
            1
        } else {
            let words = p.legal_words_with(d.degree, exec).unwrap_or_default();
            exec.map(&words, |w| graph.path_exists_labeled(w))
                .into_iter()
                .filter(|&b| b)
                .count() as u64
        };
        if labeled != d.image {
            r = r.fail(format!(
                "degree {}: image {} vs {} labeled",
                d.degree, d.image, labeled
            ));
        }
    }
    r.count("image-total", dims.iter().map(|d| d.image).sum())
}
