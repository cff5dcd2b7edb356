use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::enumerate::{enumerate_mainthm, enumerate_mainthm2, mainthm_formula, wrap};
use super::prop_gen::{gen1, gen2, gen2_identity, pi1_presentation, PropVariant};
use super::{CheckResult, Status, VerifyError};
use crate::coset_enum::{table_from_finite_image, todd_coxeter, CosetError};
use crate::mod2::{
    curve_class, even_weight_classes, group_closure, mod2_action, orthogonal_group_order, transvection,
    CurveSpec, GF2Matrix, GF2Vector, MappingClassSymbol, MappingClassWord, DEFAULT_GENUS_CAP,
};
use crate::subgroup_pres::{
    abelianization, level2_generating_set, parity_table, rs_simplify_to_bprime, schreier_candidates,
    subgroup_presentation, AbelianGroupDescription, BPrimeElement, TietzeEffort,
};
use crate::words::{equal_mod_relator, parse_presentation_file, Presentation, RelatorOutcome, Word};

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|t| t.to_string()).collect()
}

fn require_range(g: usize, min: usize, max: usize) -> Result<(), VerifyError> {
    if g < min {
        return Err(VerifyError::GenusTooSmall { genus: g, min });
    }
    if g > max {
        return Err(VerifyError::GenusTooLarge { genus: g, max });
    }
    Ok(())
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub(crate) fn mainthm_count(g: usize) -> Result<CheckResult, VerifyError> {
    let words = enumerate_mainthm(g)?;
    let formula = mainthm_formula(g);
    let details = json!({
        "count": words.len(),
        "formula": formula,
        "generators": strings(&words),
    });
    Ok(CheckResult::pass_if("mainthm-count", Some(g), words.len() == formula, details))
}

pub(crate) fn mainthm2_count(g: usize) -> Result<CheckResult, VerifyError> {
    let e = enumerate_mainthm2(g)?;
    let mut details = json!({
        "count": e.words.len(),
        "literal_count": e.literal_count,
        "formula": e.formula_count,
        "generators": strings(&e.words),
    });
    let status = if g == 3 {
        details["note"] = json!("genus 3 uses the three squared twists T_{i,j}^2");
        if e.words.len() == e.formula_count { Status::Pass } else { Status::Fail }
    } else if e.literal_count == e.formula_count {
        Status::Pass
    } else {
        details["gap"] = json!(e.literal_count as i64 - e.formula_count as i64);
        Status::DiscrepancyReported
    };
    Ok(CheckResult::new("mainthm2-count", Some(g), status, details))
}

fn prop_check_id(variant: PropVariant) -> &'static str {
    match variant {
        PropVariant::Gen1 => "prop-gen1",
        PropVariant::Gen2 => "prop-gen2",
    }
}

/// Index of the subgroup generated by `gens`, or the overflow as a value.
fn index_or_overflow(p: &Presentation, gens: &[Word], max_cosets: usize) -> Result<Result<usize, Value>, VerifyError> {
    match todd_coxeter(p, gens, max_cosets) {
        Ok(t) => {
            t.audit()?;
            Ok(Ok(t.n_cosets()))
        }
        Err(CosetError::Overflow { live, cap }) => Ok(Err(json!({ "overflow": { "live": live, "cap": cap } }))),
        Err(e) => Err(e.into()),
    }
}

fn check_identity(p: &Presentation, gens: &[Word], g: usize, k: usize) -> Result<(bool, Value), VerifyError> {
    let id = gen2_identity(g, k)?;
    let outcome = equal_mod_relator(&id.lhs, &id.rhs, p, id.budget)?;
    let product = Word::product(&id.factors);
    let factors_claimed = id.factors.iter().all(|f| gens.contains(f) || gens.contains(&f.inverse()));
    let ok = outcome.is_equal() && product == id.rhs && factors_claimed;
    let certificate = match &outcome {
        RelatorOutcome::Equal { certificate } => json!(certificate.len()),
        RelatorOutcome::BudgetExhausted => Value::Null,
    };
    Ok((
        ok,
        json!({
            "lhs": id.lhs.to_string(),
            "rhs": id.rhs.to_string(),
            "budget": id.budget,
            "insertions": certificate,
            "factors": strings(&id.factors),
            "factors_are_generators": factors_claimed,
        }),
    ))
}

/// Claimed generators of the two-sided subgroup have even parity and
/// generate a subgroup of index exactly 2, for every base crosscap.
pub fn verify_prop_gen(g: usize, variant: PropVariant, max_cosets: usize) -> Result<CheckResult, VerifyError> {
    let id = prop_check_id(variant);
    require_range(g, 3, usize::MAX)?;
    let mut per_base = Vec::new();
    let mut witness = None;
    for k in 1..=g {
        let p = pi1_presentation(g, k)?;
        let gens = match variant {
            PropVariant::Gen1 => gen1(g, k)?,
            PropVariant::Gen2 => gen2(g, k)?,
        };
        let odd: Vec<String> = gens
            .iter()
            .filter(|w| w.exponent_sum_mod2(p.alphabet()).map(|e| e.total).unwrap_or(true))
            .map(ToString::to_string)
            .collect();
        let index = index_or_overflow(&p, &gens, max_cosets)?;
        let mut entry = json!({
            "k": k,
            "generators": strings(&gens),
            "index": match &index { Ok(n) => json!(n), Err(v) => v.clone() },
        });
        let mut ok = odd.is_empty() && index == Ok(2);
        if variant == PropVariant::Gen2 {
            let (id_ok, id_details) = check_identity(&p, &gens, g, k)?;
            entry["identity"] = id_details;
            ok &= id_ok;
        }
        if !odd.is_empty() {
            entry["odd_generators"] = json!(odd);
        }
        if !ok && witness.is_none() {
            witness = Some(entry.clone());
        }
        per_base.push(entry);
    }
    let mut details = json!({ "variant": variant, "bases": per_base });
    if let Some(w) = &witness {
        details["witness"] = w.clone();
    }
    Ok(CheckResult::pass_if(id, Some(g), witness.is_none(), details))
}

/// A single square cannot generate the two-sided subgroup; the check
/// passes when enumeration rejects that claim.
pub fn verify_prop_gen_negative_control(g: usize, max_cosets: usize) -> Result<CheckResult, VerifyError> {
    require_range(g, 3, usize::MAX)?;
    let p = pi1_presentation(g, 1)?;
    let claimed = vec![gen1(g, 1)?.pop().expect("gen1 ends with the square")];
    let index = index_or_overflow(&p, &claimed, max_cosets)?;
    let rejected = index != Ok(2);
    let details = json!({
        "claimed": strings(&claimed),
        "presentation": p.to_string(),
        "witness": match &index { Ok(n) => json!({ "index": n }), Err(v) => v.clone() },
    });
    Ok(CheckResult::pass_if("prop-gen-negative-control", Some(g), rejected, details))
}

/// B′ written out from its index ranges.
fn stated_bprime(g: usize) -> BTreeSet<BPrimeElement> {
    let mut out = BTreeSet::new();
    for i in 1..g {
        for j in 1..=g {
            if i != j {
                out.insert(BPrimeElement::YY12(i, j));
                out.insert(BPrimeElement::YSq(i, j));
            }
        }
    }
    for j in 2..=g {
        for k in j + 1..=g {
            for l in k + 1..=g {
                out.insert(BPrimeElement::ConjT(j, k, l));
                out.insert(BPrimeElement::TSq(j, k, l));
            }
        }
    }
    out
}

/// Reidemeister–Schreier rewrite of the level 2 generators down to B′.
pub fn verify_prop_rm(g: usize) -> Result<CheckResult, VerifyError> {
    require_range(g, 3, usize::MAX)?;
    let t = parity_table(&level2_generating_set(g))?;
    t.audit()?;
    let transversal = strings(t.transversal());
    let transversal_ok = transversal == ["1", "Y1,2"];
    let candidates = schreier_candidates(&t)?;
    let computed = rs_simplify_to_bprime(&candidates)?;
    let stated = stated_bprime(g);
    let missing = strings(stated.difference(&computed));
    let extra = strings(computed.difference(&stated));
    let ok = transversal_ok && missing.is_empty() && extra.is_empty();
    let mut details = json!({
        "transversal": transversal,
        "candidates": candidates.len(),
        "size": computed.len(),
        "expected_size": stated.len(),
        "elements": strings(&computed),
    });
    if !ok {
        details["witness"] = json!({ "missing": missing, "extra": extra });
    }
    Ok(CheckResult::pass_if("prop-rm", Some(g), ok, details))
}

/// Every listed generator acts trivially on mod-2 homology; the unsquared
/// twist `T_{1,2}` must not.
pub fn verify_level2_membership(g: usize) -> Result<CheckResult, VerifyError> {
    require_range(g, 3, 8)?;
    let first = enumerate_mainthm(g)?;
    let second = enumerate_mainthm2(g)?.words;
    let mut offenders = Vec::new();
    for w in first.iter().chain(&second) {
        let m = mod2_action(w, g)?;
        if !m.is_identity() {
            offenders.push(json!({ "word": w.to_string(), "matrix": m }));
        }
    }
    let control = MappingClassWord::single(MappingClassSymbol::twist(&[1, 2]), 1);
    let control_matrix = mod2_action(&control, g)?;
    let control_flagged = !control_matrix.is_identity();
    let mut details = json!({
        "mainthm_checked": first.len(),
        "mainthm2_checked": second.len(),
        "negative_control": { "word": control.to_string(), "flagged": control_flagged, "matrix": control_matrix },
    });
    if !offenders.is_empty() {
        details["witness"] = json!(offenders);
    }
    Ok(CheckResult::pass_if("level2-membership", Some(g), offenders.is_empty() && control_flagged, details))
}

/// Transvections of two-sided classes generate the full orthogonal group.
pub fn verify_mccarthy_pinkall(g: usize, closure_cap: usize) -> Result<CheckResult, VerifyError> {
    require_range(g, 2, DEFAULT_GENUS_CAP)?;
    let gens: Vec<GF2Matrix> = even_weight_classes(g).iter().map(transvection).collect::<Result<_, _>>()?;
    let closure = group_closure(g, &gens, closure_cap)?;
    let order = orthogonal_group_order(g, DEFAULT_GENUS_CAP)?;
    let details = json!({
        "generators": gens.len(),
        "closure_order": closure.order(),
        "orthogonal_group_order": order,
    });
    Ok(CheckResult::pass_if("mccarthy-pinkall", Some(g), closure.order() as u64 == order, details))
}

/// `f_{i,j}` of crosscap transpositions with `f T_{1,2} f^-1 = T_{i,j}`.
fn transposition_word(i: usize, j: usize) -> MappingClassWord {
    let mut factors = Vec::new();
    for m in (1..i).rev() {
        factors.push((MappingClassSymbol::sigma(m, m + 1), 1));
    }
    for m in (2..j).rev() {
        factors.push((MappingClassSymbol::sigma(m, m + 1), 1));
    }
    MappingClassWord::new(factors)
}

/// Consistency of the mod-2 model under crosscap permutations.
pub fn verify_mod2_transport(g: usize) -> Result<CheckResult, VerifyError> {
    require_range(g, 3, DEFAULT_GENUS_CAP)?;
    let mut failures = Vec::new();
    let t12 = MappingClassWord::single(MappingClassSymbol::twist(&[1, 2]), 1);
    let mut checked = 0usize;
    for i in 1..=g {
        for j in i + 1..=g {
            let f = transposition_word(i, j);
            let conj = f.concat(&t12).concat(&f.inverse());
            let target = MappingClassWord::single(MappingClassSymbol::twist(&[i, j]), 1);
            if mod2_action(&conj, g)? != mod2_action(&target, g)? {
                failures.push(format!("{conj} vs {target}"));
            }
            let s = MappingClassSymbol::sigma(i, j).action(g)?;
            let s_inv = s.inverse().expect("permutation matrix");
            for v in GF2Vector::all(g).filter(|v| v.weight() % 2 == 0) {
                let lhs = s.mul(&transvection(&v)?)?.mul(&s_inv)?;
                if lhs != transvection(&s.apply(&v)?)? {
                    failures.push(format!("s{i},{j} transport of {v}"));
                }
            }
            for (a, b) in [(i, j), (j, i)] {
                if a > g - 1 && b > g - 1 {
                    continue;
                }
                let yy = MappingClassWord::new(vec![(MappingClassSymbol::Y(b, a), -1), (MappingClassSymbol::Y(a, b), 1)]);
                let t2 = MappingClassWord::single(MappingClassSymbol::twist(&[i, j]), 2);
                if mod2_action(&yy, g)? != mod2_action(&t2, g)? {
                    failures.push(format!("{yy} vs {t2}"));
                }
            }
            checked += 1;
        }
    }
    let shift = |v: &GF2Vector, by: usize| {
        (0..g).filter(|&b| v.get(b)).fold(GF2Vector::zero(g), |acc, b| {
            acc.add(&GF2Vector::unit((b + by) % g, g)).expect("same length")
        })
    };
    for k in 1..=g {
        for i in 1..=g {
            for j in i + 1..=g {
                if i == k || j == k {
                    continue;
                }
                let c = curve_class(&CurveSpec::Alpha { k, i, j }, g)?;
                let back = |x: usize| wrap(x as isize - k as isize + 1, g);
                let base = curve_class(&CurveSpec::Alpha { k: 1, i: back(i), j: back(j) }, g)?;
                if c != shift(&base, k - 1) {
                    failures.push(format!("eta transport of alpha_{{{k};{i},{j}}}"));
                }
            }
        }
    }
    let mut details = json!({ "pairs": checked });
    if !failures.is_empty() {
        details["witness"] = json!(failures);
    }
    Ok(CheckResult::pass_if("mod2-transport", Some(g), failures.is_empty(), details))
}

/// `<S, T | S^4, (ST)^3 S^-2>`.
pub fn sl2z_presentation() -> Presentation {
    parse_presentation_file("gens: S T\nrel: S S S S\nrel: S T S T S T S^-1 S^-1\n")
        .expect("fixed presentation parses")
        .presentation
}

/// Reductions mod 2 of `S = [[0,-1],[1,0]]` and `T = [[1,1],[0,1]]`.
pub fn sl2z_images() -> [GF2Matrix; 2] {
    [GF2Matrix::from_rows(&[&[0, 1], &[1, 0]]), GF2Matrix::from_rows(&[&[1, 1], &[0, 1]])]
}

struct Genus3Pipeline {
    cosets: usize,
    subgroup: Presentation,
    h1: AbelianGroupDescription,
    ambient: AbelianGroupDescription,
}

fn genus3_pipeline(max_cosets: usize) -> Result<Genus3Pipeline, VerifyError> {
    let p = sl2z_presentation();
    let t = table_from_finite_image(&sl2z_images(), p.alphabet().clone(), max_cosets)?;
    t.audit()?;
    t.audit_with(&p)?;
    let subgroup = subgroup_presentation(&p, &t, TietzeEffort::default())?;
    Ok(Genus3Pipeline { cosets: t.n_cosets(), h1: abelianization(&subgroup), ambient: abelianization(&p), subgroup })
}

/// First homology of the level 2 congruence subgroup of SL(2,Z).
pub fn verify_h1_genus3(max_cosets: usize) -> Result<CheckResult, VerifyError> {
    let r = genus3_pipeline(max_cosets)?;
    let expected = AbelianGroupDescription::new(2, &[2]);
    let ambient_expected = AbelianGroupDescription::new(0, &[12]);
    let ok = r.cosets == 6 && r.h1 == expected && r.ambient == ambient_expected;
    let details = json!({
        "cosets": r.cosets,
        "subgroup_generators": r.subgroup.num_generators(),
        "subgroup_relators": r.subgroup.relators().len(),
        "presentation": r.subgroup.to_string(),
        "h1": r.h1,
        "h1_text": r.h1.to_string(),
        "ambient_h1": r.ambient,
        "ambient_h1_text": r.ambient.to_string(),
    });
    Ok(CheckResult::pass_if("h1-genus3", Some(3), ok, details))
}

/// At genus 3 the generating set has as many elements as the mod-2 rank of
/// the first homology, so no smaller set exists.
pub fn verify_minimality_genus3(max_cosets: usize) -> Result<CheckResult, VerifyError> {
    let generators = enumerate_mainthm(3)?.len();
    let r = genus3_pipeline(max_cosets)?;
    let lower_bound = r.h1.mod2_dimension();
    let details = json!({
        "generators": generators,
        "h1": r.h1,
        "mod2_rank_lower_bound": lower_bound,
    });
    Ok(CheckResult::pass_if("minimality-genus3", Some(3), generators == lower_bound, details))
}

/// `dim H_1 = C(g,3) + C(g,2) - 1` from `H_1(Γ_2) = Z_2^{C(g,3)+C(g,2)}`,
/// `H_1(Z_2) = Z_2` and `H_2(Z_2) = 0`.
pub fn h1_dimension_arithmetic(g: usize) -> Result<CheckResult, VerifyError> {
    require_range(g, 5, usize::MAX)?;
    let gamma2 = binom(g, 3) + binom(g, 2);
    let quotient = 1;
    let h2_quotient = 0;
    let dimension = gamma2 - quotient + h2_quotient;
    let stated = binom(g, 3) + binom(g, 2) - 1;
    let closed_form = (g * g * g - g - 6) / 6;
    let details = json!({
        "dimension": dimension,
        "stated": stated,
        "closed_form": closed_form,
        "level2_dimension": gamma2,
    });
    Ok(CheckResult::pass_if("h1-dimension", Some(g), dimension == stated && stated == closed_form, details))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prop_gen_examples() {
        let r = verify_prop_gen(4, PropVariant::Gen1, 1000).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.details);
        let r = verify_prop_gen(5, PropVariant::Gen2, 1000).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.details);
        assert_eq!(r.details["bases"][2]["identity"]["insertions"], json!(1));
    }

    #[test]
    fn negative_control_rejects_single_square() {
        let r = verify_prop_gen_negative_control(4, 500).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.details["witness"].get("overflow").is_some() || r.details["witness"]["index"] != json!(2));
    }

    #[test]
    fn prop_rm_sizes() {
        for (g, n) in [(3, 8), (4, 20), (5, 40)] {
            let r = verify_prop_rm(g).unwrap();
            assert_eq!(r.status, Status::Pass, "{}", r.details);
            assert_eq!(r.details["size"], json!(n));
        }
        assert_eq!(stated_bprime(6).len(), 2 * 25 + 2 * 10);
    }

    #[test]
    fn mainthm2_discrepancy_at_four() {
        let r = mainthm2_count(4).unwrap();
        assert_eq!(r.status, Status::DiscrepancyReported);
        assert_eq!(r.details["literal_count"], json!(24));
        assert_eq!(r.details["formula"], json!(20));
        assert_eq!(r.details["generators"].as_array().unwrap().len(), 24);
        assert_eq!(mainthm2_count(3).unwrap().status, Status::Pass);
    }

    #[test]
    fn homology_pipeline() {
        let r = verify_h1_genus3(100).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.details);
        assert_eq!(r.details["h1"], json!({ "free_rank": 2, "torsion": [2] }));
        assert_eq!(r.details["ambient_h1_text"], json!("Z_12"));
        assert!(r.details["subgroup_generators"].as_u64().unwrap() <= 6);
        assert_eq!(verify_minimality_genus3(100).unwrap().status, Status::Pass);
    }

    #[test]
    fn dimension_arithmetic() {
        for (g, d) in [(5, 19), (6, 34), (7, 55)] {
            let r = h1_dimension_arithmetic(g).unwrap();
            assert_eq!(r.status, Status::Pass);
            assert_eq!(r.details["dimension"], json!(d));
        }
        assert!(h1_dimension_arithmetic(4).is_err());
    }

    #[test]
    fn level2_and_surjectivity() {
        for g in 3..=5 {
            let r = verify_level2_membership(g).unwrap();
            assert_eq!(r.status, Status::Pass, "{}", r.details);
            assert_eq!(verify_mod2_transport(g).unwrap().status, Status::Pass);
        }
        for g in 2..=4 {
            assert_eq!(verify_mccarthy_pinkall(g, 1 << 20).unwrap().status, Status::Pass);
        }
        assert!(verify_level2_membership(9).is_err());
    }
}
