//! Worked examples and frozen counts, each checked against a brute-force
//! computation written independently of the library.

use itertools::Itertools;
use num_bigint::BigUint;
use ufn_core::hom::{verify_cokernel_stability, verify_kernel_annihilation};
use ufn_core::pathalg::{count_paths, graphs_isomorphic, paths_of_length, DEFAULT_VERTEX_BOUND};
use ufn_core::{
    build_ufnarovskii, kernel_generators, lr_rl_pair, quiver_to_presentation,
    veronese_presentation, veronese_ufn_graph, Homomorphism, NatMatrix, Path, PathSum,
    Presentation, Quiver, QuiverInput, Word,
};

fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
    Presentation::from_strs(gens, rels).unwrap()
}

/// Words over `gens` (as strings) of length `len` avoiding every relation
/// as a substring.
fn brute_legal(gens: &[&str], rels: &[&str], len: usize) -> Vec<String> {
    (0..len)
        .map(|_| gens.iter().copied())
        .multi_cartesian_product()
        .map(|letters| letters.concat())
        .filter(|w| rels.iter().all(|r| !w.contains(r)))
        .collect()
}

fn rendered(p: &Presentation, words: &[Word]) -> Vec<String> {
    words.iter().map(|w| p.render(w)).collect()
}

fn matrix(rows: &[&[u64]]) -> NatMatrix {
    NatMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[test]
fn cube_relation_counts() {
    let p = pres(&["x", "y"], &["yyy"]);
    let expected = [1u64, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927, 1705];
    for (r, &n) in expected.iter().enumerate() {
        assert_eq!(p.count_legal_words(r), BigUint::from(n), "r = {r}");
        if r <= 8 {
            assert_eq!(brute_legal(&["x", "y"], &["yyy"], r).len() as u64, n);
        }
    }
}

#[test]
fn two_relation_counts() {
    let p = pres(&["x", "y", "z"], &["zz", "zy"]);
    let expected = [1u64, 3, 7, 17, 41, 99, 239, 577, 1393, 3363, 8119, 19601];
    for (r, &n) in expected.iter().enumerate() {
        assert_eq!(p.count_legal_words(r), BigUint::from(n), "r = {r}");
        if (1..=7).contains(&r) {
            let words = p.legal_words(r).unwrap();
            assert_eq!(
                rendered(&p, &words),
                brute_legal(&["x", "y", "z"], &["zz", "zy"], r)
            );
        }
    }
    let q = pres(&["x", "y"], &["xy", "xx"]);
    for r in 1..=12 {
        assert_eq!(q.count_legal_words(r), BigUint::from(2u32));
    }
}

#[test]
fn example_graphs_and_incidence() {
    let p = pres(&["x", "y", "z"], &["zz", "zy"]);
    let g = build_ufnarovskii(&p).unwrap();
    assert_eq!(
        g.quiver().incidence(),
        matrix(&[&[1, 1, 1], &[1, 1, 1], &[1, 0, 0]])
    );
    assert_eq!(paths_of_length(g.quiver(), 2).len(), 17);
    assert_eq!(count_paths(g.quiver(), 2).total(), BigUint::from(17u32));

    let p3 = pres(&["x", "y"], &["yyy"]);
    let g3 = build_ufnarovskii(&p3).unwrap();
    let names: Vec<&str> = g3
        .quiver()
        .vertices()
        .iter()
        .map(|v| v.name.as_str())
        .collect();
    assert_eq!(names, ["xx", "xy", "yx", "yy"]);
    assert_eq!(
        g3.quiver().incidence(),
        matrix(&[&[1, 1, 0, 0], &[0, 0, 1, 1], &[1, 1, 0, 0], &[0, 0, 1, 0]])
    );

    let pk = pres(&["x", "y"], &["xy", "xx"]);
    let gk = build_ufnarovskii(&pk).unwrap();
    let arrows: Vec<(&str, &str)> = gk
        .quiver()
        .arrows()
        .iter()
        .map(|a| {
            (
                gk.quiver().vertex(a.source).name.as_str(),
                gk.quiver().vertex(a.target).name.as_str(),
            )
        })
        .collect();
    assert_eq!(arrows, [("y", "x"), ("y", "y")]);
}

#[test]
fn word_path_examples() {
    let p = pres(&["x", "y"], &["yyy"]);
    let g = build_ufnarovskii(&p).unwrap();
    let q = g.quiver();
    let path = g.word_to_path(&p.parse_word("xyxx").unwrap()).unwrap();
    let names: Vec<&str> = path
        .arrows()
        .iter()
        .map(|&a| q.arrow(a).name.as_str())
        .collect();
    assert_eq!(names, ["xyx", "yxx"]);
    assert_eq!(p.render(&g.path_to_word(&path)), "xyxx");
    assert!(g.word_to_path(&p.parse_word("xyyy").unwrap()).is_err());
    assert!(g.word_to_path(&p.parse_word("x").unwrap()).is_err());
}

#[test]
fn labeled_paths_match_brute_force() {
    for (gens, rels) in [
        (&["x", "y", "z"][..], &["zz", "zy"][..]),
        (&["x", "y"][..], &["yyy"][..]),
        (&["x", "y"][..], &["xy", "xx"][..]),
        (&["x", "y"][..], &["xyx", "yy"][..]),
    ] {
        let p = pres(gens, rels);
        let g = build_ufnarovskii(&p).unwrap();
        let q = g.quiver();
        for len in 1..=4 {
            let all = paths_of_length(q, len);
            for w in ufn_core::presentation::all_words(p.num_generators(), len) {
                let mut expected: Vec<Path> = all
                    .iter()
                    .filter(|path| {
                        path.arrows()
                            .iter()
                            .map(|&a| q.arrow(a).label.unwrap())
                            .eq(w.letters().iter().copied())
                    })
                    .cloned()
                    .collect();
                expected.sort();
                assert_eq!(g.paths_with_label(&w), expected, "{}", p.render(&w));
            }
        }
    }
}

#[test]
fn images_of_the_examples() {
    let p3 = pres(&["x", "y"], &["yyy"]);
    let g3 = build_ufnarovskii(&p3).unwrap();
    let f = Homomorphism::new(&g3);
    let q = g3.quiver();
    let arrow = |name: &str| PathSum::from_path(Path::arrow(q, q.arrow_by_name(name).unwrap()));

    let yx = p3.parse_word("yx").unwrap();
    let product = f.f_word(&yx);
    assert_eq!(product, f.f_word_by_walk(&yx));
    assert_eq!(product.len(), 4);

    // a_{yxx} f(xx) = f(yxx)
    let xx = p3.parse_word("xx").unwrap();
    let yxx = p3.parse_word("yxx").unwrap();
    assert_eq!(arrow("yxx").multiply(&f.f_word(&xx)), f.f_word(&yxx));
    // an arrow ending away from where f(xx) starts kills it
    assert!(arrow("xxy").multiply(&f.f_word(&xx)).is_zero());

    let p5 = pres(&["x", "y", "z"], &["zz", "zy"]);
    let g5 = build_ufnarovskii(&p5).unwrap();
    let f5 = Homomorphism::new(&g5);
    assert!(f5.f_word(&p5.parse_word("zy").unwrap()).is_zero());
    let k5 = kernel_generators(&g5).unwrap();
    let stability = verify_cokernel_stability(&f5);
    assert!(stability.passed);
    assert_eq!(stability.counts["vertex-pairs"], 9);
    assert_eq!(stability.counts["arrow-pairs"], 21);
    assert!(verify_kernel_annihilation(&k5, &f5).passed);
}

#[test]
fn second_veronese_of_cube_relation_matches_hand_built_graph() {
    let p = pres(&["x", "y"], &["yyy"]);
    let aliases: Vec<String> = ["s", "t", "u", "v"].map(String::from).to_vec();
    let vp = veronese_presentation(&p, 2, Some(&aliases)).unwrap();
    let g = veronese_ufn_graph(&vp).unwrap();

    let mut hand = Quiver::new();
    for v in ["s", "t", "u", "v"] {
        hand.add_vertex(v, None);
    }
    let id = |c: char| "stuv".find(c).unwrap();
    for a in [
        "ss", "st", "su", "sv", "tt", "ts", "tu", "uu", "us", "ut", "uv", "vs", "vt",
    ] {
        let c: Vec<char> = a.chars().collect();
        hand.add_arrow(a, id(c[0]), id(c[1]), None, None).unwrap();
    }
    let map = graphs_isomorphic(g.quiver(), &hand, DEFAULT_VERTEX_BOUND).unwrap();
    assert!(map.is_some());

    let f = Homomorphism::new(&g);
    let image = |x: &str| {
        let sum = f
            .f_letter(vp.presentation().letter_index(x).unwrap())
            .clone();
        sum.support()
            .map(|path| g.quiver().arrow(path.arrows()[0]).name.clone())
            .collect::<Vec<_>>()
    };
    assert_eq!(image("s"), ["ss", "st", "su", "sv"]);
    assert_eq!(image("t"), ["ts", "tt", "tu"]);
    assert_eq!(image("u"), ["us", "ut", "uu", "uv"]);
    assert_eq!(image("v"), ["vs", "vt"]);
}

#[test]
fn products_of_the_equivalence_matrices() {
    let l = matrix(&[&[1, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 1, 1]]);
    let r = matrix(&[&[1, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
    let (lr, rl) = lr_rl_pair(&l, &r).unwrap();
    assert_eq!(
        lr.incidence(),
        matrix(&[&[1, 0, 0, 1], &[1, 0, 0, 1], &[0, 1, 0, 0], &[0, 1, 1, 0]])
    );
    assert_eq!(
        rl.incidence(),
        matrix(&[&[1, 1, 1], &[1, 0, 0], &[0, 1, 0]])
    );

    let y3 = build_ufnarovskii(&pres(&["x", "y"], &["yyy"])).unwrap();
    let map = graphs_isomorphic(&lr, y3.quiver(), DEFAULT_VERTEX_BOUND)
        .unwrap()
        .unwrap();
    assert_eq!(map, [0, 2, 3, 1]);
    assert!(lr_rl_pair(&l, &l).is_err());
}

#[test]
fn penrose_quiver_presentation() {
    let text = r#"{"vertices": ["0", "1", "2"],
        "arrows": [{"name": "l", "from": "0", "to": "0"}, {"name": "a", "from": "0", "to": "1"},
                   {"name": "b", "from": "1", "to": "0"}, {"name": "c", "from": "1", "to": "2"},
                   {"name": "d", "from": "2", "to": "0"}],
        "forbidden_paths": []}"#;
    let qi = QuiverInput::from_json(text).unwrap();
    let p = quiver_to_presentation(&qi).unwrap();
    // 25 ordered pairs, 9 of them composable
    assert_eq!(p.forbidden().len(), 16);
    let g = build_ufnarovskii(&p).unwrap();
    assert_eq!((g.quiver().num_vertices(), g.quiver().num_arrows()), (5, 9));
    // legal words of length m are the composable arrow sequences
    let q = qi.quiver();
    for m in 1..=6 {
        assert_eq!(
            p.count_legal_words(m),
            BigUint::from(paths_of_length(q, m).len())
        );
    }
}
