//! Exhaustive checks of the identities `f` and its kernel satisfy.

use num_bigint::BigUint;

use super::{Homomorphism, KernelData};
use crate::exec::Exec;
use crate::pathalg::{path_count_totals, PathSum};
use crate::presentation::Word;
use crate::report::CheckReport;

/// Which per-word identities [`verify_images`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub kernel: bool,
    pub routes: bool,
    pub homomorphism: bool,
    pub independence: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            kernel: true,
            routes: true,
            homomorphism: true,
            independence: true,
        }
    }
}

const KERNEL: usize = 0;
const ROUTES: usize = 1;
const COEFFS: usize = 2;
const HOMOMORPHISM: usize = 3;
const INDEPENDENCE: usize = 4;
const NUM_CHECKS: usize = 5;

#[derive(Clone, Debug, Default)]
struct Tally {
    checked: [u64; NUM_CHECKS],
    failure: [Option<String>; NUM_CHECKS],
    // per degree: number of legal words, nonzero images, total support size
    legal: Vec<u64>,
    nonzero: Vec<u64>,
    support: Vec<u64>,
}

impl Tally {
    fn new(max_len: usize) -> Self {
        Tally {
            legal: vec![0; max_len + 1],
            nonzero: vec![0; max_len + 1],
            support: vec![0; max_len + 1],
            ..Default::default()
        }
    }

    fn record(&mut self, check: usize, ok: bool, witness: impl FnOnce() -> String) {
        self.checked[check] += 1;
        if !ok && self.failure[check].is_none() {
            self.failure[check] = Some(witness());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for i in 0..NUM_CHECKS {
            self.checked[i] += other.checked[i];
            if self.failure[i].is_none() {
                self.failure[i] = other.failure[i].clone();
            }
        }
        for r in 0..self.legal.len() {
            self.legal[r] += other.legal[r];
            self.nonzero[r] += other.nonzero[r];
            self.support[r] += other.support[r];
        }
        self
    }
}

struct Sweep<'a, 'g> {
    hom: &'a Homomorphism<'g>,
    kernel: &'a KernelData,
    max_len: usize,
    opts: SweepOptions,
}

/// Per node of the sweep: `images[i]` is the letter product of the first
/// `i + 1` letters, `walks[s]` the label walk of the suffix starting at `s`.
struct Frame {
    images: Vec<PathSum>,
    walks: Vec<PathSum>,
}

impl Sweep<'_, '_> {
    /// Paths of `sum` continued by every arrow labeled `x`.
    fn walk_step(&self, sum: &PathSum, x: usize) -> PathSum {
        let q = self.hom.graph().quiver();
        let paths = sum.support().flat_map(|p| {
            q.out_arrows(p.target())
                .iter()
                .filter(move |&&a| q.arrow(a).label == Some(x))
                .map(move |&a| p.then_arrow(q, a).expect("out arrow composes"))
        });
        PathSum::from_paths(paths).expect("paths of one length")
    }

    fn visit(&self, state: u32, word: &mut Word, frame: &mut Frame, tally: &mut Tally) {
        let p = self.hom.graph().presentation();
        let q = self.hom.graph().quiver();
        let len = word.len();
        let img = frame.images.last().expect("nonempty word");
        let render = || p.render(word);

        tally.legal[len] += 1;
        if !img.is_zero() {
            tally.nonzero[len] += 1;
            tally.support[len] += img.len() as u64;
        }
        if self.opts.kernel {
            let killed = img.is_zero();
            tally.record(KERNEL, killed == self.kernel.suffix_criterion(word), || {
                format!(
                    "{}: f(w)=0 is {killed}, suffix criterion disagrees",
                    render()
                )
            });
        }
        if self.opts.routes {
            tally.record(ROUTES, *img == frame.walks[0], || {
                format!("{}: product and label walk differ", render())
            });
            let ok = img.has_unit_coefficients() && img.degree().is_none_or(|d| d == len);
            tally.record(COEFFS, ok, || {
                format!("{}: coefficient or degree defect", render())
            });
        }
        if self.opts.homomorphism {
            for split in 1..len {
                let product = frame.images[split - 1].multiply(&frame.walks[split]);
                tally.record(HOMOMORPHISM, product == *img, || {
                    format!(
                        "{} | {}",
                        p.render(&word.prefix(split)),
                        p.render(&word.slice(split, len))
                    )
                });
            }
        }
        if self.opts.independence {
            // every path in the support carries w as label, so supports of
            // distinct words are disjoint
            let ok = img.support().all(|path| {
                path.arrows()
                    .iter()
                    .map(|&a| q.arrow(a).label)
                    .eq(word.letters().iter().map(|&x| Some(x)))
            });
            tally.record(INDEPENDENCE, ok, || {
                format!("{}: support path with a different label", render())
            });
        }

        if len == self.max_len {
            return;
        }
        let track_walks = self.opts.routes || self.opts.homomorphism;
        for x in 0..p.num_generators() {
            if let Some(next) = p.automaton_step(state, x) {
                let child = frame.images[len - 1].multiply(self.hom.f_letter(x));
                let walks = if track_walks {
                    let mut walks: Vec<PathSum> =
                        frame.walks.iter().map(|w| self.walk_step(w, x)).collect();
                    walks.push(self.hom.f_word_by_walk(&Word::letter(x)));
                    walks
                } else {
                    Vec::new()
                };
                let saved = std::mem::replace(&mut frame.walks, walks);
                word.push(x);
                frame.images.push(child);
                self.visit(next, word, frame, tally);
                frame.images.pop();
                word.pop();
                frame.walks = saved;
            }
        }
    }
}

/// One depth-first sweep over every legal word of length `1..=max_len`,
/// carrying `f` of each prefix. Returns one report per enabled identity:
///
/// * `kernel-suffix-criterion`: `f(w) = 0` iff a suffix of length at most
///   `ell` lies in the kernel set;
/// * `image-two-routes`, `image-unit-coefficients`: the letter product
///   equals the label walk, with all coefficients 1 and degree `|w|`;
/// * `homomorphism`: `f(uv) = f(u) f(v)` over every split, with `f(v)`
///   taken from the label walk so both sides are computed independently;
/// * `image-independence`: supports are disjoint and, per degree, partition
///   the paths of that length.
pub fn verify_images(
    hom: &Homomorphism<'_>,
    kernel: &KernelData,
    max_len: usize,
    opts: SweepOptions,
    exec: Exec,
) -> Vec<CheckReport> {
    let p = hom.graph().presentation();
    let sweep = Sweep {
        hom,
        kernel,
        max_len,
        opts,
    };
    let tally = if max_len == 0 {
        Tally::new(0)
    } else {
        exec.map_range(p.num_generators(), |x| {
            let mut tally = Tally::new(max_len);
            if let Some(state) = p.automaton_step(p.automaton_start(), x) {
                let mut word = Word::letter(x);
                let mut frame = Frame {
                    images: vec![hom.f_letter(x).clone()],
                    walks: vec![hom.f_word_by_walk(&word)],
                };
                sweep.visit(state, &mut word, &mut frame, &mut tally);
            }
            tally
        })
        .into_iter()
        .fold(Tally::new(max_len), Tally::merge)
    };

    let report = |name: &str, idx: usize| {
        let r = CheckReport::new(name, 1, max_len).count("checked", tally.checked[idx]);
        match &tally.failure[idx] {
            Some(w) => r.fail(w.clone()),
            None => r,
        }
    };
    let mut out = Vec::new();
    if opts.kernel {
        let killed: u64 = tally
            .legal
            .iter()
            .zip(&tally.nonzero)
            .map(|(l, n)| l - n)
            .sum();
        out.push(report("kernel-suffix-criterion", KERNEL).count("killed", killed));
    }
    if opts.routes {
        out.push(report("image-two-routes", ROUTES));
        out.push(report("image-unit-coefficients", COEFFS));
    }
    if opts.homomorphism {
        out.push(report("homomorphism", HOMOMORPHISM));
    }
    if opts.independence {
        let mut r = report("image-independence", INDEPENDENCE);
        let paths = path_count_totals(hom.graph().quiver(), max_len, exec);
        for (len, (&covered, total)) in tally.support.iter().zip(&paths).enumerate().skip(1) {
            if BigUint::from(covered) != *total {
                r = r.fail(format!(
                    "degree {len}: supports cover {covered} of {total} paths"
                ));
            }
        }
        out.push(r.count("nonzero-images", tally.nonzero.iter().sum()));
    }
    out
}

/// Disjointness of the supports of `f(w)`, `w` in `L_r`, for `r <= max_len`.
pub fn verify_independence(
    hom: &Homomorphism<'_>,
    kernel: &KernelData,
    max_len: usize,
    exec: Exec,
) -> CheckReport {
    let opts = SweepOptions {
        kernel: false,
        routes: false,
        homomorphism: false,
        independence: true,
    };
    verify_images(hom, kernel, max_len, opts, exec)
        .pop()
        .expect("one report")
}

/// `f(w) = 0` for every forbidden word.
pub fn verify_relations_killed(hom: &Homomorphism<'_>) -> CheckReport {
    let p = hom.graph().presentation();
    let forbidden = p.forbidden();
    let hi = forbidden.iter().map(Word::len).max().unwrap_or(0);
    let mut r = CheckReport::new("relations-killed", 2.min(hi), hi)
        .count("checked", forbidden.len() as u64);
    if let Some(w) = forbidden.iter().find(|w| !hom.f_word(w).is_zero()) {
        r = r.fail(p.render(w));
    }
    r
}

/// Every `s` in the kernel set followed by any `v` in `L_ell` is illegal.
pub fn verify_kernel_annihilation(kernel: &KernelData, hom: &Homomorphism<'_>) -> CheckReport {
    let p = hom.graph().presentation();
    let ell = p.ell();
    let tails = p.legal_words(ell).unwrap_or_default();
    let mut r = CheckReport::new("kernel-annihilates-degree-ell", ell, 2 * ell);
    let mut pairs = 0u64;
    for s in kernel.words() {
        for v in &tails {
            pairs += 1;
            let sv = s.word.concat(v);
            if p.is_legal(&sv) {
                r = r.fail(p.render(&sv));
            }
        }
    }
    r.count("pairs", pairs)
}

/// Trivial paths and arrows map `f(L_ell)` into `{0} ∪ f(L_ell)` and
/// `{0} ∪ f(L_{ell+1})`; a nonzero `a·f(w)` equals `f(label(a) w)`.
pub fn verify_cokernel_stability(hom: &Homomorphism<'_>) -> CheckReport {
    let graph = hom.graph();
    let p = graph.presentation();
    let q = graph.quiver();
    let ell = p.ell();
    let mut r = CheckReport::new("cokernel-stability", ell, ell + 1);
    let words = match p.legal_words(ell) {
        Ok(ws) => ws,
        Err(e) => return r.fail(e.to_string()),
    };
    let images: Vec<PathSum> = words.iter().map(|w| hom.f_word(w)).collect();
    let (mut vertex_pairs, mut arrow_pairs) = (0u64, 0u64);
    for (w, fw) in words.iter().zip(&images) {
        for v in 0..q.num_vertices() {
            vertex_pairs += 1;
            let e_fw = PathSum::vertex(v).multiply(fw);
            if !(e_fw.is_zero() || e_fw == *fw) {
                r = r.fail(format!("e_{} · f({})", q.vertex(v).name, p.render(w)));
            }
        }
        for a in 0..q.num_arrows() {
            arrow_pairs += 1;
            let a_fw = PathSum::from_path(crate::pathalg::Path::arrow(q, a)).multiply(fw);
            if a_fw.is_zero() {
                continue;
            }
            let u = Word::letter(graph.arrow_label(a)).concat(w);
            if !p.is_legal(&u) || a_fw != hom.f_word(&u) {
                r = r.fail(format!("a_{} · f({})", q.arrow(a).name, p.render(w)));
            }
        }
    }
    r.count("vertex-pairs", vertex_pairs)
        .count("arrow-pairs", arrow_pairs)
}
