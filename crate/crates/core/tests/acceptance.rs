//! One line per acceptance criterion. Runs with `harness = false` so the
//! report is always printed; exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use semihopf::census::{complete_type, enumerate_types, parse_rule_set, tensor_type, CensusOptions};
use semihopf::cyclotomic::CycNumber;
use semihopf::fusion::{from_group_characters, FusionDatum, Profile, TypeSignature};
use semihopf::groups::{
    build_g12, build_g18, d3xd3_reflections, g12_gamma, g18_gamma, AbelianBasis, AltBicharacter, FiniteGroup,
    GroupAction,
};
use semihopf::hopf::{
    algebra_characters, build_h8, build_lifted_twist, cocommutativity_criterion, drinfeld_double_group_type,
    from_group, group_like_elements, hit_left, surviving_group_likes, twist_hopf, verify_hopf_axioms, verify_twist,
    yd_one_dim_pairs,
};
use semihopf::search::{search_fusion, SearchOutcome};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn types(list: &[&str]) -> Vec<TypeSignature> {
    let mut v: Vec<TypeSignature> = list.iter().map(|s| s.parse().unwrap()).collect();
    v.sort();
    v
}

fn show(v: &[TypeSignature]) -> String {
    v.iter().map(|t| format!("({t})")).collect::<Vec<_>>().join(" ")
}

fn census(dim: u64, rules: &str, n: Option<u64>, oracle: &[&str], budget: u64) -> semihopf::census::CensusResult {
    let mut opts = CensusOptions::new(parse_rule_set(rules).unwrap());
    opts.n_filter = n;
    opts.budget = budget;
    if !oracle.is_empty() {
        opts.oracle = Some(types(oracle));
    }
    enumerate_types(dim, &opts)
}

fn timed<T>(limit: Duration, label: &str, f: impl FnOnce() -> T) -> Result<T, String> {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    if took > limit {
        return Err(format!("{label} took {took:?}, limit {limit:?}"));
    }
    Ok(out)
}

fn criterion_1() -> Check {
    let second = Duration::from_secs(1);
    let mut notes = Vec::new();

    let r = timed(second, "dim 60", || census(60, "R1,R4,R5", Some(1), &[], 0))?;
    let want = types(&["1,1;3,2;4,1;5,1", "1,1;2,4;3,2;5,1", "1,1;2,4;3,3;4,1"]);
    ensure(r.survivors == want, format!("dim 60 n=1: {}", show(&r.survivors)))?;

    let r = timed(second, "dim 24", || census(24, "R1..R5", None, &[], 0))?;
    let want = types(&[
        "1,2;2,1;3,2",
        "1,3;2,3;3,1",
        "1,4;2,5",
        "1,4;2,1;4,1",
        "1,6;3,2",
        "1,8;2,4",
        "1,8;4,1",
        "1,12;2,3",
    ]);
    ensure(r.survivors == want, format!("dim 24: {}", show(&r.survivors)))?;

    let r = timed(second, "dim 30", || census(30, "R1..R8", None, &[], 0))?;
    let want = types(&["1,2;2,7", "1,3;3,3", "1,5;5,1", "1,6;2,6", "1,10;2,5"]);
    ensure(r.survivors == want, format!("dim 30: {}", show(&r.survivors)))?;

    let r = timed(second, "dim 42", || census(42, "R1..R8", None, &[], 0))?;
    let want = types(&[
        "1,2;2,1;6,1",
        "1,2;2,1;3,4",
        "1,2;2,10",
        "1,6;6,1",
        "1,6;2,9",
        "1,6;3,4",
        "1,14;2,7",
    ]);
    ensure(r.survivors == want, format!("dim 42: {}", show(&r.survivors)))?;

    let r = timed(second, "dim 40", || census(40, "all", None, &[], 0))?;
    let want = types(&[
        "1,4;2,9",
        "1,4;2,5;4,1",
        "1,4;2,1;4,2",
        "1,8;2,8",
        "1,8;2,4;4,1",
        "1,8;4,2",
        "1,20;2,5",
    ]);
    ensure(r.survivors == want, format!("dim 40: {}", show(&r.survivors)))?;

    let expected56 = types(&[
        "1,4;2,13",
        "1,4;2,9;4,1",
        "1,4;2,5;4,2",
        "1,4;2,1;4,3",
        "1,7;7,1",
        "1,8;4,3",
        "1,8;2,4;4,2",
        "1,8;2,8;4,1",
        "1,8;2,12",
        "1,28;2,7",
    ]);
    let delegated56 = ["1,4;3,4;4,1", "1,4;4,1;6,1"];
    let r = timed(second, "dim 56", || census(56, "all", None, &delegated56, 1_000_000))?;
    let leftovers: Vec<_> = r
        .survivors
        .iter()
        .filter(|t| !expected56.contains(t))
        .cloned()
        .collect();
    ensure(
        leftovers.iter().all(|t| delegated56.contains(&t.to_string().as_str())),
        format!("dim 56 unexpected survivors: {}", show(&leftovers)),
    )?;
    ensure(
        r.oracle.iter().all(|o| o.verdict == "infeasible"),
        format!(
            "dim 56 oracle: {:?}",
            r.oracle.iter().map(|o| &o.verdict).collect::<Vec<_>>()
        ),
    )?;
    ensure(
        r.final_types == expected56,
        format!("dim 56 final: {}", show(&r.final_types)),
    )?;

    let expected54 = types(&[
        "1,2;2,4;6,1",
        "1,2;2,4;3,4",
        "1,2;2,13",
        "1,6;2,3;6,1",
        "1,6;2,12",
        "1,6;2,3;3,4",
        "1,9;3,1;6,1",
        "1,9;3,5",
        "1,18;2,9",
        "1,18;3,4",
        "1,18;6,1",
        "1,27;3,3",
    ]);
    let delegated54 = ["1,2;2,1;4,3", "1,2;3,4;4,1", "1,2;4,1;6,1"];
    let r = timed(second, "dim 54", || census(54, "all", None, &delegated54, 1_000_000))?;
    ensure(
        r.oracle.len() == 3 && r.oracle.iter().all(|o| o.verdict == "infeasible"),
        "dim 54 oracle did not refute all delegated types",
    )?;
    ensure(
        r.final_types == expected54,
        format!("dim 54 final: {}", show(&r.final_types)),
    )?;

    let expected36 = types(&[
        "1,2;2,4;3,2",
        "1,3;2,6;3,1",
        "1,4;2,8",
        "1,4;2,4;4,1",
        "1,4;4,2",
        "1,6;2,3;3,2",
        "1,9;3,3",
        "1,12;2,6",
        "1,18;3,2",
    ]);
    let r = timed(second, "dim 36", || {
        census(36, "all", None, &["1,2;3,2;4,1"], 1_000_000)
    })?;
    ensure(
        r.final_types == expected36,
        format!("dim 36 final: {}", show(&r.final_types)),
    )?;

    let expected48 = types(&[
        "1,2;2,3;3,2;4,1",
        "1,3;3,1;6,1",
        "1,3;2,9;3,1",
        "1,3;3,5",
        "1,4;2,2;3,4",
        "1,4;2,3;4,2",
        "1,4;2,7;4,1",
        "1,4;2,11",
        "1,4;2,2;6,1",
        "1,6;2,6;3,2",
        "1,8;2,2;4,2",
        "1,8;2,10",
        "1,8;2,6;4,1",
        "1,12;2,9",
        "1,12;3,4",
        "1,12;6,1",
        "1,16;2,8",
        "1,16;4,2",
        "1,24;2,6",
    ]);
    let residual48 = ["1,2;2,7;3,2", "1,16;2,4;4,1"];
    let r = census(48, "all", None, &residual48, 50);
    ensure(
        expected48.iter().all(|t| r.survivors.contains(t)),
        format!("dim 48 survivors miss published types: {}", show(&r.survivors)),
    )?;
    let extra: Vec<_> = r
        .survivors
        .iter()
        .filter(|t| !expected48.contains(t))
        .cloned()
        .collect();
    ensure(
        extra == types(&residual48),
        format!("dim 48 extra survivors: {}", show(&extra)),
    )?;
    for o in &r.oracle {
        ensure(
            o.verdict != "feasible",
            format!("dim 48 oracle found ({}) feasible", o.ty),
        )?;
        notes.push(format!("({}) {}", o.ty, o.verdict));
    }
    Ok(format!("golden lists exact; dim 48 residuals: {}", notes.join(", ")))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut nodes = Vec::new();
    for m in 1..=3 {
        let ty: TypeSignature = format!("1,2;2,1;4,{m}").parse().unwrap();
        let out = search_fusion(&ty, Profile::Hopf, 1_000_000);
        ensure(out.is_infeasible(), format!("({ty}) is {}", out.verdict()))?;
        nodes.push(out.nodes());
    }
    let ty: TypeSignature = "1,2;2,1".parse().unwrap();
    let s3 = from_group_characters(&FiniteGroup::symmetric(3).unwrap()).unwrap();
    match search_fusion(&ty, Profile::Hopf, 1_000_000) {
        SearchOutcome::Feasible { witness, .. } => {
            ensure(witness.is_isomorphic(&s3), "witness is not the S3 character ring")?
        }
        other => return Err(format!("(1,2;2,1) is {}", other.verdict())),
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), format!("took {took:?}"))?;
    Ok(format!(
        "(1,2;2,1;4,m) infeasible with nodes {nodes:?}; S3 ring recovered"
    ))
}

fn abelian_groups_up_to(max: usize) -> Vec<FiniteGroup> {
    // invariant factor chains d_1 | d_2 | ... with product <= max
    fn chains(max: usize, last: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(acc.clone());
        let prod: usize = acc.iter().product();
        for d in 2..=max / prod {
            if last == 0 || d % last == 0 {
                acc.push(d);
                chains(max, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    chains(max, 0, &mut Vec::new(), &mut out);
    out.into_iter()
        .filter(|c| !c.is_empty())
        .map(|c| {
            c.iter().skip(1).fold(FiniteGroup::cyclic(c[0]), |g, &d| {
                FiniteGroup::product(&g, &FiniteGroup::cyclic(d))
            })
        })
        .collect()
}

fn fusion_properties(f: &FusionDatum) -> Result<(), String> {
    let r = f.rank();
    let one = f.degree_one();
    for i in 0..r {
        ensure(f.dual(f.dual(i)) == i, format!("dual not an involution at {i}"))?;
        for j in 0..r {
            let unit = f.n(i, j, f.unit());
            ensure(
                unit == u32::from(j == f.dual(i)),
                format!("unit coefficient of {i}*{j}"),
            )?;
            for k in 0..r {
                let n = f.n(i, j, k);
                ensure(
                    n == f.n(k, f.dual(j), i) && n == f.n(f.dual(i), k, j),
                    format!("Frobenius symmetry fails at ({i},{j},{k})"),
                )?;
            }
        }
        let d = f.degree(i);
        let stab = one.iter().filter(|&&g| f.n(g, i, i) == 1).count() as u64;
        ensure(
            (d * d).is_multiple_of(stab),
            format!("stabilizer of {i} has order {stab}, degree {d}"),
        )?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    let mut groups = abelian_groups_up_to(16);
    let abelian = groups.len();
    groups.push(FiniteGroup::symmetric(3).unwrap());
    groups.push(FiniteGroup::dihedral(4));
    groups.push(FiniteGroup::quaternion());
    for g in &groups {
        let f = from_group_characters(g).map_err(|e| format!("{}: {e}", g.name()))?;
        let report = f.verify(Profile::Hopf);
        ensure(report.passed(), format!("{}: {:?}", g.name(), report.first_failure()))?;
        fusion_properties(&f).map_err(|e| format!("{}: {e}", g.name()))?;
    }
    Ok(format!("{abelian} abelian groups of order <= 16 plus S3, D4, Q8"))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let h = build_h8();
    let axioms = verify_hopf_axioms(&h);
    ensure(axioms.passed(), format!("{:?}", axioms.first_failure()))?;
    ensure(
        axioms.antipode_squared_identity == Some(true),
        "S^2 is not the identity",
    )?;

    let mut gl = group_like_elements(&h).map_err(|e| e.to_string())?;
    let mut want: Vec<_> = (0..4).map(|i| h.basis(i)).collect();
    gl.sort();
    want.sort();
    ensure(gl == want, "group-likes differ from {1,x,y,xy}")?;

    let (x, y, z) = (1, 2, 4);
    let chars = algebra_characters(&h, &[x, y, z]).map_err(|e| e.to_string())?;
    ensure(chars.len() == 4, format!("{} characters", chars.len()))?;
    ensure(chars.iter().all(|e| e.values[x] == e.values[y]), "eta(x) != eta(y)")?;

    let half = CycNumber::from_frac(1, 2);
    for eta in &chars {
        let got = hit_left(eta, &h.basis(z), &h).map_err(|e| e.to_string())?;
        let ex = &eta.values[x];
        let mut factor = vec![CycNumber::zero(); h.dim()];
        factor[0] = &half * &(&CycNumber::one() + ex);
        factor[y] = &half * &(&CycNumber::one() - ex);
        let want: Vec<CycNumber> = h
            .mul(&factor, &h.basis(z))
            .unwrap()
            .iter()
            .map(|w| w * &eta.values[z])
            .collect();
        ensure(got == want, "hit action on z differs from the closed form")?;
    }

    let yd = yd_one_dim_pairs(&h).map_err(|e| e.to_string())?;
    ensure(yd.order() == 8, format!("{} Yetter-Drinfeld pairs", yd.order()))?;
    ensure(
        yd.abelian && yd.exponent <= 2,
        format!("pair group exponent {}", yd.exponent),
    )?;
    ensure(
        yd.invariant_factors == Some(vec![2, 2, 2]),
        format!("{:?}", yd.invariant_factors),
    )?;
    let eps = chars
        .iter()
        .find(|e| e.values == h.counit())
        .ok_or("no counit character")?;
    let ab = chars
        .iter()
        .find(|e| e.values[x].is_one() && !e.values[z].is_one())
        .ok_or("no central character alpha*beta")?;
    let generated = chars
        .iter()
        .filter(|e| e.values[x] == -CycNumber::one())
        .filter_map(|alpha| {
            let ids = [
                yd.position(&h.basis(3), eps),
                yd.position(&h.basis(0), ab),
                yd.position(&h.basis(x), alpha),
            ];
            match ids {
                [Some(a), Some(b), Some(c)] => Some(yd.group.generated(&[a, b, c]).len()),
                _ => None,
            }
        })
        .max()
        .unwrap_or(0);
    ensure(
        generated == 8,
        format!("generator pairs span a group of order {generated}"),
    )?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(1), format!("took {took:?}"))?;
    Ok(format!("axioms, 4 characters, 8 pairs generating Z2^3, {took:.0?}"))
}

/// Degrees of D(G) irreducibles by classes and centralizer irreducibles.
fn double_type_by_classes(g: &FiniteGroup) -> TypeSignature {
    let mut counts = std::collections::BTreeMap::new();
    for class in g.conjugacy_classes() {
        let c = g.subgroup_as_group(&g.centralizer(class[0])).unwrap();
        for d in c.irreducible_degrees().unwrap() {
            *counts.entry(d * class.len() as u64).or_insert(0u64) += 1;
        }
    }
    let n = counts.remove(&1).unwrap_or(0);
    let entries: Vec<(u64, u64)> = counts.into_iter().collect();
    TypeSignature::new(n, &entries).unwrap()
}

fn criterion_5() -> Check {
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let oracle = double_type_by_classes(&s3);
    ensure(
        oracle.to_string() == "1,2;2,4;3,2",
        format!("class oracle for S3 gives ({oracle})"),
    )?;
    for (g, want) in [
        (FiniteGroup::dihedral(4), "1,8;2,14"),
        (FiniteGroup::quaternion(), "1,8;2,14"),
        (s3, "1,2;2,4;3,2"),
    ] {
        let got = drinfeld_double_group_type(&g).map_err(|e| e.to_string())?;
        ensure(got.to_string() == want, format!("D({}) has type ({got})", g.name()))?;
        ensure(
            got == double_type_by_classes(&g),
            format!("D({}) disagrees with the class oracle", g.name()),
        )?;
    }
    let h8: TypeSignature = "1,4;2,1".parse().unwrap();
    let t = tensor_type(&h8, &h8);
    ensure(t.to_string() == "1,16;2,8;4,1", format!("tensor gives ({t})"))?;
    let c = complete_type(64, 8, &[2]).map_err(|e| e.to_string())?;
    ensure(c.to_string() == "1,8;2,14", format!("completion gives ({c})"))?;
    Ok("D(D4) = D(Q8) = (1,8;2,14), D(S3) = (1,2;2,4;3,2), tensor and completion exact".into())
}

fn criterion_6() -> Check {
    let nondeg22 = AltBicharacter::from_upper_exponents(vec![2, 2], &[(0, 1, 1)]).unwrap();

    let g = build_g12();
    let h = from_group(&g);
    let phi = build_lifted_twist(&g, &g12_gamma(), &nondeg22).map_err(|e| e.to_string())?;
    ensure(verify_twist(&h, &phi).passed(), "G12 twist fails verification")?;
    let t = twist_hopf(&h, &phi).map_err(|e| e.to_string())?;
    ensure(verify_hopf_axioms(&t).passed(), "twisted G12 fails the Hopf axioms")?;
    ensure(!t.is_cocommutative(), "twisted G12 is cocommutative")?;
    let surv = surviving_group_likes(&g, &phi).map_err(|e| e.to_string())?;
    ensure(surv.len() == 4, format!("G12 survivors {surv:?}"))?;
    let trivial = build_lifted_twist(&g, &g12_gamma(), &AltBicharacter::trivial(vec![2, 2])).unwrap();
    ensure(
        twist_hopf(&h, &trivial).unwrap().is_cocommutative(),
        "trivial twist is not cocommutative",
    )?;

    let g = build_g18();
    let omega = AltBicharacter::from_upper_exponents(vec![3, 3], &[(0, 1, 1)]).unwrap();
    let crit = cocommutativity_criterion(&g, &g18_gamma(), &omega).map_err(|e| e.to_string())?;
    let phi = build_lifted_twist(&g, &g18_gamma(), &omega).map_err(|e| e.to_string())?;
    let direct = twist_hopf(&from_group(&g), &phi)
        .map_err(|e| e.to_string())?
        .is_cocommutative();
    ensure(!crit && !direct, format!("G18 criterion {crit}, direct {direct}"))?;

    let start = Instant::now();
    let d3 = FiniteGroup::dihedral(3);
    let g = FiniteGroup::product(&d3, &d3);
    let h = from_group(&g);
    let phi = build_lifted_twist(&g, &d3xd3_reflections(), &nondeg22).map_err(|e| e.to_string())?;
    ensure(verify_twist(&h, &phi).passed(), "D3xD3 twist fails verification")?;
    let t = twist_hopf(&h, &phi).map_err(|e| e.to_string())?;
    ensure(verify_hopf_axioms(&t).passed(), "twisted D3xD3 fails the Hopf axioms")?;
    ensure(!t.is_cocommutative(), "twisted D3xD3 is cocommutative")?;
    let surv = surviving_group_likes(&g, &phi).map_err(|e| e.to_string())?;
    ensure(surv.len() == 4, format!("D3xD3 survivors {surv:?}"))?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(120), format!("D3xD3 took {took:?}"))?;
    Ok(format!("G12, G18 and D3xD3 ({took:.1?}) as expected"))
}

fn nondegenerate_on(g: &FiniteGroup, a: &[usize]) -> AltBicharacter {
    let orders = AbelianBasis::new(g, a).unwrap().orders().to_vec();
    AltBicharacter::from_upper_exponents(orders, &[(0, 1, 1)]).unwrap()
}

fn z3_squared_by_inversion() -> FiniteGroup {
    let n = FiniteGroup::product(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(3));
    let q = FiniteGroup::cyclic(2);
    let act = GroupAction::from_fn(q.clone(), 9, |s, x| if s == 1 { n.inv(x) } else { x }).unwrap();
    FiniteGroup::semidirect(&n, &q, &act).unwrap()
}

fn alternating4() -> FiniteGroup {
    let v4 = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    let q = FiniteGroup::cyclic(3);
    // rotate the three involutions of the Klein group
    let rot = |s: usize, x: usize| (0..s).fold(x, |x, _| [0, 2, 3, 1][x]);
    let act = GroupAction::from_fn(q.clone(), 4, rot).unwrap();
    FiniteGroup::semidirect(&v4, &q, &act).unwrap()
}

fn criterion_7() -> Check {
    let mut triples: Vec<(String, FiniteGroup, Vec<usize>, AltBicharacter)> = Vec::new();

    let klein = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    let all: Vec<usize> = klein.elements().collect();
    let b = nondegenerate_on(&klein, &all);
    triples.push(("Z2xZ2 / whole".into(), klein, all, b));

    let d4 = FiniteGroup::dihedral(4);
    let k = d4.generated(&[2, 4]);
    let b = nondegenerate_on(&d4, &k);
    triples.push(("D4 / Klein".into(), d4, k, b));

    let z2z4 = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4));
    let all: Vec<usize> = z2z4.elements().collect();
    let b = nondegenerate_on(&z2z4, &all);
    triples.push(("Z2xZ4 / whole".into(), z2z4, all, b));

    let g = z3_squared_by_inversion();
    let n: Vec<usize> = (0..9).collect();
    let b = nondegenerate_on(&g, &n);
    triples.push(("Z3^2:Z2 / Z3^2".into(), g, n, b));

    let g = build_g18();
    let omega = AltBicharacter::from_upper_exponents(vec![3, 3], &[(0, 1, 1)]).unwrap();
    triples.push((
        "G18 / Gamma / omega^2".into(),
        g.clone(),
        g18_gamma(),
        omega.power(2).unwrap(),
    ));
    triples.push((
        "G18 / Gamma / trivial".into(),
        g.clone(),
        g18_gamma(),
        AltBicharacter::trivial(vec![3, 3]),
    ));
    triples.push(("G18 / Gamma / omega".into(), g, g18_gamma(), omega));

    let a4 = alternating4();
    let v4 = a4.generated(&[1, 2]);
    let b = nondegenerate_on(&a4, &v4);
    triples.push(("A4 / V4".into(), a4, v4, b));

    let mut lines = Vec::new();
    for (name, g, a, b) in &triples {
        ensure(g.is_normal(a), format!("{name}: subgroup not normal"))?;
        let crit = cocommutativity_criterion(g, a, b).map_err(|e| format!("{name}: {e}"))?;
        let phi = build_lifted_twist(g, a, b).map_err(|e| format!("{name}: {e}"))?;
        let direct = twist_hopf(&from_group(g), &phi)
            .map_err(|e| format!("{name}: {e}"))?
            .is_cocommutative();
        ensure(crit == direct, format!("{name}: criterion {crit}, direct {direct}"))?;
        lines.push(format!("{name}={}", if crit { "cocomm" } else { "non-cocomm" }));
    }
    let orders: Vec<usize> = triples.iter().map(|t| t.1.order()).collect();
    ensure(triples.len() >= 6, "fewer than 6 triples")?;
    ensure(
        orders.iter().min() == Some(&4) && orders.iter().max() == Some(&18),
        format!("orders {orders:?}"),
    )?;
    Ok(format!("{} triples agree: {}", triples.len(), lines.join(", ")))
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_semihopf"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_8() -> Check {
    let commands: Vec<Vec<&str>> = vec![
        vec!["census", "--dim", "30"],
        vec!["census", "--dim", "36", "--oracle", "1,2;3,2;4,1"],
        vec![
            "census",
            "--dim",
            "54",
            "--oracle",
            "1,2;2,1;4,3",
            "1,2;3,4;4,1",
            "1,2;4,1;6,1",
        ],
        vec!["fusion-search", "--type", "1,2;2,1"],
        vec!["fusion-search", "--type", "1,2;2,1;4,1"],
        vec!["fusion-verify", "--group", "D4"],
        vec!["double", "--group", "Q8"],
        vec!["h8-report"],
        vec!["h8", "report"],
        vec![
            "twist",
            "--group",
            "G12",
            "--subgroup",
            "Gamma",
            "--bicharacter",
            r#"[["0","1/2"],["1/2","0"]]"#,
            "--check-cocommutative",
            "--group-likes",
        ],
        vec![
            "twist",
            "--group",
            "G18",
            "--subgroup",
            "Gamma",
            "--bicharacter",
            r#"[["0","1/3"],["2/3","0"]]"#,
            "--check-cocommutative",
        ],
    ];
    for cmd in &commands {
        let mut one = vec!["--threads", "1"];
        one.extend(cmd.iter().copied());
        let mut four = vec!["--threads", "4"];
        four.extend(cmd.iter().copied());
        let (c1, o1) = run_cli(&one);
        let (c4, o4) = run_cli(&four);
        ensure(
            c1 == c4 && o1 == o4,
            format!("`{}` differs across thread counts", cmd.join(" ")),
        )?;
        ensure(c1 == 0 || c1 == 1, format!("`{}` exited with {c1}", cmd.join(" ")))?;
        serde_json::from_slice::<serde_json::Value>(&o1).map_err(|e| format!("`{}`: {e}", cmd.join(" ")))?;
    }
    Ok(format!(
        "{} commands byte-identical with 1 and 4 threads",
        commands.len()
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("census golden lists", criterion_1),
        ("fusion oracle", criterion_2),
        ("fusion axioms", criterion_3),
        ("H8 suite", criterion_4),
        ("double types", criterion_5),
        ("twist suite", criterion_6),
        ("criterion cross-validation", criterion_7),
        ("CLI determinism", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        match res {
            Ok(detail) => println!("criterion {}: PASS  {name} [{took:.2?}] {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} [{took:.2?}] {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
