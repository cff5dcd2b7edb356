//! End-to-end runs across modules, checked against values computed by hand
//! or taken from standard tables.

use mcgverify_core::coset_enum::{table_from_finite_image, todd_coxeter};
use mcgverify_core::mod2::{
    even_weight_classes, group_closure, mod2_action, orthogonal_group_order, transvection, GF2Matrix,
    MappingClassWord, DEFAULT_CLOSURE_CAP,
};
use mcgverify_core::subgroup_pres::{
    abelianization, schreier_generators, subgroup_presentation, AbelianGroupDescription, TietzeEffort,
};
use mcgverify_core::verifier::{enumerate_mainthm, gen2_identity, sl2z_images, sl2z_presentation};
use mcgverify_core::words::{equal_mod_relator, parse_presentation_file, parse_word};

#[test]
fn telescoping_identity_reduces_freely() {
    let w = parse_word("x2 x3 x3^-1 x4^-1 x4 x5 x5^-1 x6^-1 x6 x2", None).unwrap();
    assert_eq!(w.to_string(), "x2 x2");
    let id = gen2_identity(6, 1).unwrap();
    assert_eq!(id.rhs, w);
    assert_eq!(id.budget, 0);
}

#[test]
fn relator_insertion_identity_at_genus_five() {
    let f = parse_presentation_file("gens: x2 x3 x4 x5\nrel: x2 x2 x3 x3 x4 x4 x5 x5\n").unwrap();
    let lhs = parse_word("x2 x2", None).unwrap();
    let rhs = parse_word("x2 x4 x4 x5 x5 x2 x2 x3 x3 x2", None).unwrap();
    assert!(equal_mod_relator(&lhs, &rhs, &f.presentation, 1).unwrap().is_equal());
    assert!(!equal_mod_relator(&lhs, &rhs, &f.presentation, 0).unwrap().is_equal());
}

#[test]
fn cyclic_quotient_end_to_end() {
    let f = parse_presentation_file("gens: a\nrel: a a a a\nsub: a a\n").unwrap();
    let t = todd_coxeter(&f.presentation, &f.subgroup, 100).unwrap();
    assert_eq!(t.n_cosets(), 2);
    let a = parse_word("a", None).unwrap();
    assert_eq!(t.trace(0, &a).unwrap(), 1);
    let names: Vec<String> = schreier_generators(&t).iter().map(|s| s.word.to_string()).collect();
    assert_eq!(names, ["a a"]);
    let q = subgroup_presentation(&f.presentation, &t, TietzeEffort::default()).unwrap();
    assert_eq!(q.num_generators(), 1);
    assert_eq!(abelianization(&q), AbelianGroupDescription::new(0, &[2]));
}

#[test]
fn index_one_preserves_abelianization() {
    let f = parse_presentation_file("gens: x1 x2 x3\nrel: x1 x1 x2 x2 x3 x3\nsub: x1\nsub: x2\nsub: x3\n").unwrap();
    let t = todd_coxeter(&f.presentation, &f.subgroup, 100).unwrap();
    assert_eq!(t.n_cosets(), 1);
    let q = subgroup_presentation(&f.presentation, &t, TietzeEffort::default()).unwrap();
    assert_eq!(abelianization(&q), abelianization(&f.presentation));
    assert_eq!(abelianization(&q).to_string(), "Z^2 ⊕ Z_2");
}

#[test]
fn two_sided_subgroup_of_surface_groups() {
    // The orientation double cover of N_h is the closed orientable surface
    // of genus h - 1, whose first homology is free of rank 2h - 2.
    for h in 3..=5 {
        let names: Vec<String> = (1..=h).map(|i| format!("x{i}")).collect();
        let relator: Vec<String> = names.iter().flat_map(|n| [n.clone(), n.clone()]).collect();
        let mut text = format!("gens: {}\nrel: {}\n", names.join(" "), relator.join(" "));
        for i in 1..h {
            text.push_str(&format!("sub: x{i} x{}\nsub: x{} x{i}\n", i + 1, i + 1));
        }
        text.push_str("sub: x1 x1\n");
        let f = parse_presentation_file(&text).unwrap();
        let t = todd_coxeter(&f.presentation, &f.subgroup, 1000).unwrap();
        assert_eq!(t.n_cosets(), 2);
        let q = subgroup_presentation(&f.presentation, &t, TietzeEffort::default()).unwrap();
        assert_eq!(abelianization(&q), AbelianGroupDescription::new(2 * h - 2, &[]), "h={h}");
    }
}

#[test]
fn congruence_kernel_pipeline() {
    let p = sl2z_presentation();
    let t = table_from_finite_image(&sl2z_images(), p.alphabet().clone(), 100).unwrap();
    assert_eq!(t.n_cosets(), 6);
    t.audit_with(&p).unwrap();
    let q = subgroup_presentation(&p, &t, TietzeEffort::default()).unwrap();
    assert!(q.num_generators() <= 6);
    assert_eq!(abelianization(&q).to_string(), "Z^2 ⊕ Z_2");
    assert_eq!(abelianization(&p).to_string(), "Z_12");
}

#[test]
fn small_finite_images() {
    let alphabet = parse_presentation_file("gens: s\n").unwrap().presentation.alphabet().clone();
    let t = table_from_finite_image(&[GF2Matrix::identity(2)], alphabet.clone(), 10).unwrap();
    assert_eq!(t.n_cosets(), 1);
    let swap = GF2Matrix::from_rows(&[&[0, 1], &[1, 0]]);
    let t = table_from_finite_image(&[swap], alphabet, 10).unwrap();
    assert_eq!(t.n_cosets(), 2);
}

#[test]
fn orthogonal_orders_match_known_table() {
    // |O(n, F_2)| for the standard dot product, n = 1..6.
    let known = [1u64, 2, 6, 48, 720, 23040];
    for (i, &order) in known.iter().enumerate() {
        let g = i + 1;
        assert_eq!(orthogonal_group_order(g, 6).unwrap(), order, "g={g}");
        let gens: Vec<GF2Matrix> = even_weight_classes(g).iter().map(|v| transvection(v).unwrap()).collect();
        let gens = if gens.is_empty() { vec![GF2Matrix::identity(g)] } else { gens };
        assert_eq!(group_closure(g, &gens, DEFAULT_CLOSURE_CAP).unwrap().order() as u64, order, "g={g}");
    }
}

#[test]
fn listed_generators_are_level_two() {
    for g in 3..=8 {
        for w in enumerate_mainthm(g).unwrap() {
            assert!(mod2_action(&w, g).unwrap().is_identity(), "g={g}: {w}");
        }
    }
    let w: MappingClassWord = "T1,2".parse().unwrap();
    assert!(!mod2_action(&w, 3).unwrap().is_identity());
}
