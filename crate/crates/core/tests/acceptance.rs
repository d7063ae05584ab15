//! One line per acceptance criterion. Runs without the libtest harness so
//! the lines are always printed.

use std::collections::BTreeSet;
use std::time::Instant;

use arclink_core::arc::ComponentKind;
use arclink_core::calculus::{analyze_graph, DltKind, SingClass};
use arclink_core::components::{chain_system_solvable, enumerate_components};
use arclink_core::cusp::{dual_sequence, monodromy, recover_sequence, CuspSequence};
use arclink_core::graph::{intersection_matrix, is_negative_definite, PlumbingGraph};
use arclink_core::inoue::{inoue_cross_check, quad_mult_matrix, Lattice};
use arclink_core::quotient::{
    conjugacy_classes, cyclic_quotient_components, group_closure, mckay_report, presets, real_a_component_count,
    Center, RealForm,
};
use arclink_core::report::component_records;
use arclink_core::seifert::{enumerate_seifert_components, seifert_data};
use arclink_core::{Mat2, QuadElement};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type M = [[i128; 2]; 2];
type Criterion = (&'static str, fn() -> Result<(), String>);

fn mul(a: M, b: M) -> M {
    [
        [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
        [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
    ]
}

fn mono(b: &[i64]) -> M {
    b.iter().fold([[1, 0], [0, 1]], |acc, &x| mul(acc, [[x as i128, 1], [-1, 0]]))
}

const T: M = [[-1, -1], [1, 2]];

fn as_mat(m: &Mat2) -> M {
    let e = m.entries();
    let c = |x: &BigInt| i128::try_from(x).expect("small entries");
    [[c(&e[0][0]), c(&e[0][1])], [c(&e[1][0]), c(&e[1][1])]]
}

fn rotations(b: &[i64]) -> Vec<Vec<i64>> {
    (0..b.len()).map(|r| b[r..].iter().chain(&b[..r]).copied().collect()).collect()
}

/// Numerator of `[b1, ..., bs]` by the plain recursion.
fn hj_num(b: &[i64]) -> i128 {
    let (mut p, mut prev) = (1i128, 0i128);
    for &x in b.iter().rev() {
        let next = x as i128 * p - prev;
        prev = p;
        p = next;
    }
    p
}

fn seq(b: &[i64]) -> CuspSequence {
    CuspSequence::new(b.to_vec()).unwrap()
}

fn valid_sequences(kmax: usize, bmax: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    let mut all = Vec::new();
    for _ in 0..kmax {
        out = out
            .iter()
            .flat_map(|p| (2..=bmax).map(move |x| p.iter().copied().chain([x]).collect::<Vec<_>>()))
            .collect();
        all.extend(out.iter().filter(|b| b.iter().any(|&x| x >= 3)).cloned());
    }
    all
}

fn c1() -> Result<(), String> {
    let b = seq(&[3, 3, 3]);
    let m = as_mat(&monodromy(&b));
    if m != [[21, 8], [-8, -3]] || m != mono(&[3, 3, 3]) {
        return Err(format!("monodromy {m:?}"));
    }
    let d = dual_sequence(&b);
    if d.terms() != [3, 3, 3] {
        return Err(format!("dual {d}"));
    }
    Ok(())
}

fn c2() -> Result<(), String> {
    for (b, expect, trace) in [(vec![2, 3], vec![4], 4), (vec![2, 2, 3, 4], vec![5, 3, 2], 20)] {
        let d = dual_sequence(&seq(&b));
        if !rotations(&expect).contains(&d.terms().to_vec()) {
            return Err(format!("dual of {b:?} is {d}"));
        }
        let (m, ms) = (mono(&b), mono(d.terms()));
        if m[0][0] + m[1][1] != trace || ms[0][0] + ms[1][1] != trace {
            return Err(format!("traces of {b:?}"));
        }
        // the identity holds for the rotation of b ending in a term >= 3
        let ok = rotations(&b).iter().any(|r| rotations(d.terms()).iter().any(|s| mul(mono(r), T) == mul(T, mono(s))));
        if !ok {
            return Err(format!("MT != TM* for {b:?}"));
        }
    }
    Ok(())
}

fn c3() -> Result<(), String> {
    let start = Instant::now();
    let all = valid_sequences(6, 6);
    for b in &all {
        let d = dual_sequence(&seq(b));
        let m = mono(b);
        if m[0][0] + m[1][1] < 3 {
            return Err(format!("trace of {b:?}"));
        }
        let ok = rotations(b).iter().any(|r| rotations(d.terms()).iter().any(|s| mul(mono(r), T) == mul(T, mono(s))));
        if !ok {
            return Err(format!("MT != TM* for {b:?}"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if all.len() < 1000 || secs >= 10.0 {
        return Err(format!("{} cases in {secs:.2}s", all.len()));
    }
    Ok(())
}

fn c4() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(2024);
    let mut n = 0;
    while n < 500 {
        let k = rng.gen_range(1..=8);
        let b: Vec<i64> = (0..k).map(|_| rng.gen_range(2..=9)).collect();
        if b.iter().all(|&x| x == 2) {
            continue;
        }
        n += 1;
        let r = recover_sequence(&monodromy(&seq(&b))).map_err(|e| e.to_string())?;
        if !rotations(&b).contains(&r.terms().to_vec()) {
            return Err(format!("{b:?} -> {r}"));
        }
    }
    Ok(())
}

fn c5() -> Result<(), String> {
    let mut cases: Vec<(String, Vec<_>, usize, usize)> = Vec::new();
    for m in 1..=12 {
        cases.push((format!("Z/{m}"), presets::cyclic(m), m, m - 1));
    }
    cases.push(("Q8".into(), presets::q8(), 5, 4));
    cases.push(("2T".into(), presets::binary_tetrahedral(), 7, 6));
    cases.push(("2O".into(), presets::binary_octahedral(), 8, 7));
    cases.push(("2I".into(), presets::binary_icosahedral(), 9, 8));
    for (name, gens, classes, curves) in cases {
        let g = group_closure(&gens).map_err(|e| e.to_string())?;
        let count = conjugacy_classes(&g).count();
        let r = mckay_report(&g).map_err(|e| e.to_string())?;
        if count != classes || r.nontrivial_classes != count - 1 || r.expected_exceptional_curves != curves || !r.matches
        {
            return Err(format!("{name}: {count} classes, {r}"));
        }
    }
    Ok(())
}

fn c6() -> Result<(), String> {
    let labels = cyclic_quotient_components(&5.into(), &2.into(), 2).map_err(|e| e.to_string())?;
    let values: Vec<BigInt> = labels.iter().map(|l| l.a.clone()).collect();
    if values != (1..=10).map(BigInt::from).collect::<Vec<_>>() || labels.iter().any(|l| l.m != 5.into()) {
        return Err(format!("{} labels", labels.len()));
    }
    let on_curve: Vec<i64> =
        labels.iter().filter(|l| l.center == Center::OnCurve).map(|l| i64::try_from(&l.a).unwrap() / 5).collect();
    if on_curve != [1, 2] {
        return Err(format!("on-curve labels {on_curve:?}"));
    }
    Ok(())
}

fn c7() -> Result<(), String> {
    let g = PlumbingGraph::star(-1, 0, &[vec![-2], vec![-3], vec![-7]]);
    let sd = seifert_data(&g).map_err(|e| e.to_string())?;
    let a = enumerate_seifert_components(&sd, 6).map_err(|e| e.to_string())?;
    let d = analyze_graph(&g).map_err(|e| e.to_string())?;
    let b = enumerate_components(&d, 6).map_err(|e| e.to_string())?;
    let la: BTreeSet<ComponentKind> = a.into_iter().map(|c| c.kind).collect();
    let lb: BTreeSet<ComponentKind> = b.into_iter().map(|c| c.kind).collect();
    // curve: 6, orbifold points k <= 6 with alpha not dividing k: 3 + 4 + 6
    if la.len() != 19 || lb.len() != 19 || la != lb {
        return Err(format!("{} vs {} components", la.len(), lb.len()));
    }
    Ok(())
}

fn c8() -> Result<(), String> {
    let mut chains = vec![vec![]];
    let mut all = Vec::new();
    for _ in 0..6 {
        chains = chains
            .iter()
            .flat_map(|p: &Vec<i64>| (2..=5).map(move |x| p.iter().copied().chain([x]).collect::<Vec<_>>()))
            .collect();
        all.extend(chains.clone());
    }
    for b in &all {
        let eulers: Vec<i64> = b.iter().map(|x| -x).collect();
        let d = analyze_graph(&PlumbingGraph::chain("v", &eulers)).map_err(|e| e.to_string())?;
        let SingClass::CyclicQuotient { m, q } = &d.class else { return Err(format!("{b:?}: {}", d.class.label())) };
        if d.kind != DltKind::SelfDlt || *m != BigInt::from(hj_num(b)) || *q != BigInt::from(hj_num(&b[1..])) {
            return Err(format!("{b:?}: {}", d.class.label()));
        }
        if b.len() <= 3 {
            let records = component_records(&d, 2).map_err(|e| e.to_string())?;
            if records.len() as i128 != 2 * hj_num(b) {
                return Err(format!("{b:?}: {} report records", records.len()));
            }
        }
        for n in 1..=3u64 {
            let labels = cyclic_quotient_components(m, q, n).map_err(|e| e.to_string())?;
            let expected = hj_num(b) * n as i128;
            if labels.len() as i128 != expected {
                return Err(format!("{b:?} bound {n}: {} labels, expected {expected}", labels.len()));
            }
        }
    }
    Ok(())
}

fn c9() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..200 {
        let s = rng.gen_range(1..=7usize);
        let b: Vec<i64> = (0..s).map(|_| rng.gen_range(2..=7)).collect();
        let eulers: Vec<i64> = b.iter().map(|x| -x).collect();
        if !is_negative_definite(&intersection_matrix(&PlumbingGraph::chain("v", &eulers))) {
            return Err(format!("{b:?} not negative definite"));
        }
        let i = rng.gen_range(0..s);
        let j = rng.gen_range(i + 1..=s);
        let (ni, ni1) = (BigInt::from(rng.gen_range(0..50)), BigInt::from(rng.gen_range(1..50)));
        if chain_system_solvable(&b, i, j, &ni, &ni1).map_err(|e| e.to_string())? {
            return Err(format!("{b:?} i={i} j={j} ({ni},{ni1}) solvable"));
        }
    }
    Ok(())
}

fn c10() -> Result<(), String> {
    let golden = Lattice::new(QuadElement::from_ints(1, 0, 5), QuadElement::from_fracs(1, 2, 1, 2, 5)).unwrap();
    let silver = Lattice::new(QuadElement::from_ints(1, 0, 2), QuadElement::from_ints(0, 1, 2)).unwrap();
    let cases = [
        (golden, QuadElement::from_fracs(3, 2, 1, 2, 5), [[1, 1], [1, 2]]),
        (silver, QuadElement::from_ints(3, 2, 2), [[3, 4], [2, 3]]),
    ];
    for (l, u, expect) in cases {
        let m = as_mat(&quad_mult_matrix(&u, &l).map_err(|e| e.to_string())?);
        if m != expect {
            return Err(format!("M_u = {m:?}"));
        }
        let r = inoue_cross_check(&l, &u, 5).map_err(|e| e.to_string())?;
        // independent: the recovered sequence has the monodromy trace of M_u
        let rm = mono(r.recovered.terms());
        if rm[0][0] + rm[1][1] != m[0][0] + m[1][1] {
            return Err(format!("recovered {} has the wrong trace", r.recovered));
        }
        if expect == [[1, 1], [1, 2]] && r.recovered.terms() != [3] {
            return Err(format!("recovered {}", r.recovered));
        }
        if !r.all_pass() {
            return Err(r.witness.unwrap_or_default());
        }
    }
    Ok(())
}

fn c11() -> Result<(), String> {
    for m in 1..=9u64 {
        let r = real_a_component_count(RealForm::SumOfSquares, m).map_err(|e| e.to_string())?;
        let expect = if m % 2 == 1 { 1 } else { 2 };
        if r.count != expect || r.caveat.is_some() {
            return Err(format!("x^2+y^2=z^{m}: {}", r.count));
        }
    }
    for m in 2..=9u64 {
        let r = real_a_component_count(RealForm::Hyperbolic, m).map_err(|e| e.to_string())?;
        if r.count != 4 * m - 6 || !r.caveat.is_some_and(|c| c.contains("suggest")) {
            return Err(format!("xy=z^{m}: {} {:?}", r.count, r.caveat));
        }
    }
    Ok(())
}

fn c12() -> Result<(), String> {
    let e8 = PlumbingGraph::star(-2, 0, &[vec![-2], vec![-2, -2], vec![-2, -2, -2, -2]]);
    if !is_negative_definite(&intersection_matrix(&e8)) {
        return Err("E8".into());
    }
    for n in 1..=20 {
        if !is_negative_definite(&intersection_matrix(&PlumbingGraph::chain("a", &vec![-2; n]))) {
            return Err(format!("A_{n}"));
        }
    }
    let mut plus = PlumbingGraph::new();
    plus.add_vertex("x", 1, 0);
    if is_negative_definite(&intersection_matrix(&plus)) {
        return Err("+1 vertex passed".into());
    }
    for b in valid_sequences(6, 6) {
        let eulers: Vec<i64> = b.iter().map(|x| -x).collect();
        if !is_negative_definite(&intersection_matrix(&PlumbingGraph::cycle("e", &eulers))) {
            return Err(format!("cusp cycle {b:?}"));
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("monodromy (3,3,3) and auto-duality", c1),
        ("duals of (2,3) and (2,2,3,4) with MT = TM*", c2),
        ("exhaustive duality sweep k <= 6, b <= 6 under 10 s", c3),
        ("recover(monodromy(b)) round trip, 500 samples", c4),
        ("conjugacy class counts and McKay offsets", c5),
        ("cyclic quotient (5,2) labels at bound 2", c6),
        ("Sigma(2,3,7) components agree across routes", c7),
        ("chain graphs: dlt route matches cyclic labels", c8),
        ("chain systems unsolvable on random chains", c9),
        ("quadratic unit cross-check, d = 5 and d = 2", c10),
        ("real A-type component catalog", c11),
        ("negative-definiteness gate", c12),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let ms = start.elapsed().as_millis();
        match res {
            Ok(()) => println!("PASS {:>2} {name} ({ms} ms)", i + 1),
            Err(w) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {w}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
