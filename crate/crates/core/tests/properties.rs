use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigUint;
use proptest::prelude::*;
use ufn_core::hom::{kernel_membership, verify_images, SweepOptions};
use ufn_core::pathalg::{
    count_paths, graphs_isomorphic, matrices_isomorphic, paths_of_length, quiver_from_matrix,
};
use ufn_core::presentation::all_words;
use ufn_core::{
    build_ufnarovskii, is_legal_by_scan, kernel_generators, normalize_forbidden,
    quiver_to_presentation, verify_presentation, veronese_presentation, Exec, Homomorphism,
    NatMatrix, Path, PathSum, Presentation, Quiver, QuiverInput, Word,
};

const NAMES: [&str; 3] = ["x", "y", "z"];

fn presentation() -> impl Strategy<Value = Presentation> {
    (1usize..=3)
        .prop_flat_map(|g| {
            let word = (2usize..=4).prop_flat_map(move |len| prop::collection::vec(0..g, len));
            (Just(g), prop::collection::vec(word, 0..=4))
        })
        .prop_map(|(g, rels)| {
            Presentation::new(
                NAMES[..g].to_vec(),
                rels.into_iter().map(Word::new).collect(),
            )
            .unwrap()
        })
}

fn small_matrix(max_n: usize) -> impl Strategy<Value = NatMatrix> {
    (1usize..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u64..=2, n), n)
            .prop_map(|rows| NatMatrix::from_rows(rows).unwrap())
    })
}

/// Plain factor test, letter by letter.
fn has_factor(w: &[usize], f: &[usize]) -> bool {
    f.len() <= w.len() && (0..=w.len() - f.len()).any(|i| &w[i..i + f.len()] == f)
}

fn brute_legal(p: &Presentation, len: usize) -> Vec<Word> {
    all_words(p.num_generators(), len)
        .filter(|w| {
            p.forbidden()
                .iter()
                .all(|f| !has_factor(w.letters(), f.letters()))
        })
        .collect()
}

/// Arrow sequences of length `n`, found by extending arrow by arrow.
fn brute_paths(q: &Quiver, n: usize) -> Vec<Vec<usize>> {
    let mut paths: Vec<Vec<usize>> = (0..q.num_arrows()).map(|a| vec![a]).collect();
    for _ in 1..n {
        paths = paths
            .into_iter()
            .flat_map(|p| {
                let end = q.arrow(*p.last().unwrap()).target;
                (0..q.num_arrows())
                    .filter(move |&a| q.arrow(a).source == end)
                    .map(move |a| [p.clone(), vec![a]].concat())
            })
            .collect();
    }
    paths
}

fn permute(m: &NatMatrix, perm: &[usize]) -> NatMatrix {
    let n = m.rows();
    let mut out = NatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            *out.get_mut(perm[i], perm[j]) = m.get(i, j);
        }
    }
    out
}

fn is_certificate(a: &NatMatrix, b: &NatMatrix, map: &[usize]) -> bool {
    (0..a.rows()).all(|i| (0..a.rows()).all(|j| a.get(i, j) == b.get(map[i], map[j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn legal_words_match_brute_force(p in presentation()) {
        for r in 0..=6 {
            let words = p.legal_words(r).unwrap();
            prop_assert_eq!(&words, &brute_legal(&p, r));
            prop_assert_eq!(p.count_legal_words(r), BigUint::from(words.len()));
        }
    }

    #[test]
    fn normalization_keeps_the_language(p in presentation()) {
        let normalized = normalize_forbidden(p.forbidden());
        prop_assert!(normalized.len() <= p.forbidden().len());
        for r in 1..=6 {
            for w in all_words(p.num_generators(), r) {
                prop_assert_eq!(is_legal_by_scan(&w, p.forbidden()), is_legal_by_scan(&w, &normalized));
            }
        }
    }

    #[test]
    fn path_counts_match_walks_and_words(p in presentation()) {
        let g = build_ufnarovskii(&p).unwrap();
        for n in 0..=5 {
            let walked = if n == 0 { g.quiver().num_vertices() } else { brute_paths(g.quiver(), n).len() };
            prop_assert_eq!(count_paths(g.quiver(), n).total(), BigUint::from(walked));
            prop_assert_eq!(p.count_legal_words(n + p.ell()), BigUint::from(walked));
        }
    }

    #[test]
    fn words_and_paths_round_trip(p in presentation()) {
        let g = build_ufnarovskii(&p).unwrap();
        for n in 0..=4 {
            for path in paths_of_length(g.quiver(), n) {
                let w = g.path_to_word(&path);
                prop_assert!(p.is_legal(&w));
                prop_assert_eq!(g.word_to_path(&w).unwrap(), path);
            }
        }
    }

    #[test]
    fn kernel_is_decided_by_short_suffixes(p in presentation()) {
        let g = build_ufnarovskii(&p).unwrap();
        let k = kernel_generators(&g).unwrap();
        let f = Homomorphism::new(&g);
        for r in 1..=7 {
            for w in p.legal_words(r).unwrap() {
                prop_assert_eq!(f.f_word(&w).is_zero(), kernel_membership(&w, &k, &p).unwrap());
            }
        }
        // every member of the kernel set labels no path
        for s in k.words() {
            prop_assert!(g.paths_with_label(&s.word).is_empty());
            prop_assert_eq!(s.legal, p.is_legal(&s.word));
        }
    }

    #[test]
    fn f_is_multiplicative(p in presentation(), seed in any::<u64>()) {
        let g = build_ufnarovskii(&p).unwrap();
        let f = Homomorphism::new(&g);
        let words = p.legal_words(6).unwrap();
        prop_assume!(!words.is_empty());
        let w = &words[(seed as usize) % words.len()];
        for split in 0..=w.len() {
            let (u, v) = (w.prefix(split), w.slice(split, w.len()));
            let product = f.f_word(&u).multiply(&f.f_word(&v));
            prop_assert_eq!(&product, &f.f_word(w));
        }
        for rel in p.forbidden() {
            prop_assert!(f.f_word(rel).is_zero());
        }
    }

    #[test]
    fn images_sweep_passes(p in presentation()) {
        let g = build_ufnarovskii(&p).unwrap();
        let k = kernel_generators(&g).unwrap();
        let reports = verify_images(&Homomorphism::new(&g), &k, 6, SweepOptions::default(), Exec::Sequential);
        prop_assert_eq!(reports.len(), 5);
        for r in reports {
            prop_assert!(r.passed, "{:?}", r);
        }
    }

    #[test]
    fn veronese_blocks_are_quadratic(p in presentation()) {
        let ell = p.ell();
        for n in ell..=ell + 1 {
            let vp = veronese_presentation(&p, n, None).unwrap();
            let v = vp.presentation();
            for m in 0..=3 {
                let via_blocks: BTreeSet<Word> = v.legal_words(m).unwrap().iter().map(|w| vp.to_base(w)).collect();
                let direct: BTreeSet<Word> = p.legal_words(n * m).unwrap().into_iter().collect();
                prop_assert_eq!(&via_blocks, &direct);
                for w in &direct {
                    let chopped = vp.from_base(w).unwrap();
                    prop_assert_eq!(&vp.to_base(&chopped), w);
                }
            }
            prop_assert!(vp.hilbert_agreement(3).report.passed);
        }
    }

    #[test]
    fn quiver_input_matches_path_walker(
        n in 1usize..=3,
        arrows in prop::collection::vec((0usize..3, 0usize..3), 1..=4),
        picks in prop::collection::vec((2usize..=3, any::<u64>()), 0..=2),
    ) {
        let mut q = Quiver::new();
        for v in 0..n {
            q.add_vertex(v.to_string(), None);
        }
        for (i, &(s, t)) in arrows.iter().enumerate() {
            q.add_arrow(format!("a{i}"), s % n, t % n, None, None).unwrap();
        }
        // forbidden paths drawn from the actual composable sequences
        let mut forbidden = Vec::new();
        for (len, seed) in picks {
            let candidates = brute_paths(&q, len);
            if !candidates.is_empty() {
                forbidden.push(candidates[(seed as usize) % candidates.len()].clone());
            }
        }
        let qi = QuiverInput::new(q.clone(), forbidden.clone()).unwrap();
        let p = quiver_to_presentation(&qi).unwrap();
        for m in 1..=5 {
            let walked: BTreeSet<Vec<usize>> = brute_paths(&q, m)
                .into_iter()
                .filter(|path| forbidden.iter().all(|f| !has_factor(path, f)))
                .collect();
            let legal: BTreeSet<Vec<usize>> = p.legal_words(m).unwrap().iter().map(|w| w.letters().to_vec()).collect();
            prop_assert_eq!(legal, walked);
        }
    }

    #[test]
    fn isomorphism_agrees_with_exhaustive_search(a in small_matrix(5), b_seed in small_matrix(5), perm_seed in any::<u64>()) {
        let n = a.rows();
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let perm = &perms[(perm_seed as usize) % perms.len()];
        let shuffled = permute(&a, perm);
        let map = matrices_isomorphic(&a, &shuffled, 12).unwrap().expect("a permuted copy is isomorphic");
        prop_assert!(is_certificate(&a, &shuffled, &map));

        let found = matrices_isomorphic(&a, &b_seed, 12).unwrap();
        let exhaustive = b_seed.rows() == n && perms.iter().any(|p| is_certificate(&a, &b_seed, p));
        prop_assert_eq!(found.is_some(), exhaustive);
        if let Some(map) = found {
            prop_assert!(is_certificate(&a, &b_seed, &map));
        }
        // symmetric and reflexive
        prop_assert_eq!(matrices_isomorphic(&b_seed, &a, 12).unwrap().is_some(), exhaustive);
        prop_assert!(matrices_isomorphic(&a, &a, 12).unwrap().is_some());
    }

    #[test]
    fn matrices_round_trip_through_quivers(m in small_matrix(5)) {
        let q = quiver_from_matrix(&m).unwrap();
        prop_assert_eq!(q.incidence(), m.clone());
        prop_assert!(graphs_isomorphic(&q, &quiver_from_matrix(&m).unwrap(), 12).unwrap().is_some());
    }

    #[test]
    fn multiplication_is_associative_with_local_units(m in small_matrix(4), picks in prop::collection::vec(any::<u64>(), 9)) {
        let q = quiver_from_matrix(&m).unwrap();
        let sum_of = |len: usize, seeds: &[u64]| -> PathSum {
            let paths = paths_of_length(&q, len);
            if paths.is_empty() {
                return PathSum::zero();
            }
            PathSum::from_paths(seeds.iter().map(|&s| paths[(s as usize) % paths.len()].clone())).unwrap()
        };
        let (a, b, c) = (sum_of(1, &picks[0..3]), sum_of(2, &picks[3..6]), sum_of(1, &picks[6..9]));
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
        let one = PathSum::identity(&q);
        prop_assert_eq!(one.multiply(&b), b.clone());
        prop_assert_eq!(b.multiply(&one), b.clone());
        for v in 0..q.num_vertices() {
            let e = PathSum::vertex(v);
            prop_assert_eq!(e.multiply(&e), e.clone());
            for path in b.support() {
                let single = PathSum::from_path(path.clone());
                let kept = e.multiply(&single);
                prop_assert_eq!(kept.is_zero(), path.source() != v);
            }
        }
        prop_assert!(PathSum::from_path(Path::trivial(0)).multiply(&PathSum::zero()).is_zero());
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let corpus = ufn_core::corpus::corpus(7, 12);
    for entry in &corpus {
        let p = &entry.presentation;
        for r in 0..=7 {
            assert_eq!(
                p.legal_words_with(r, Exec::Sequential).unwrap(),
                p.legal_words_with(r, Exec::Parallel).unwrap()
            );
        }
        let seq = verify_presentation(p, 6, Exec::Sequential).unwrap();
        let par = verify_presentation(p, 6, Exec::Parallel).unwrap();
        assert_eq!(seq, par);
        assert!(seq.passed, "{}: {:?}", entry.name, seq.first_failure());
    }
}
