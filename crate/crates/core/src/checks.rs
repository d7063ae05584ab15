//! Invariant sweeps run by `arclink check`.

use std::fmt;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::components::chain_system_solvable;
use crate::cusp::{check_duality, monodromy, recover_sequence, CuspSequence};
use crate::graph::{intersection_matrix, is_negative_definite, PlumbingGraph};
use crate::quotient::{conjugacy_classes, cyclic_quotient_components, group_closure, mckay_report, presets};

#[derive(Clone, Debug)]
pub struct Outcome {
    pub name: &'static str,
    pub cases: usize,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "ok   {} ({} cases)", self.name, self.cases),
            Some(w) => write!(f, "FAIL {} ({} cases): {w}", self.name, self.cases),
        }
    }
}

/// Every valid cusp sequence of length `<= kmax` with terms in `2..=bmax`.
pub fn all_sequences(kmax: usize, bmax: i64) -> Vec<CuspSequence> {
    let mut out = Vec::new();
    for k in 1..=kmax {
        let mut b = vec![2i64; k];
        loop {
            if let Ok(c) = CuspSequence::new(b.clone()) {
                out.push(c);
            }
            let mut i = 0;
            while i < k && b[i] == bmax {
                b[i] = 2;
                i += 1;
            }
            if i == k {
                break;
            }
            b[i] += 1;
        }
    }
    out
}

pub fn random_sequence(rng: &mut impl Rng, kmax: usize, bmax: i64) -> CuspSequence {
    loop {
        let k = rng.gen_range(1..=kmax);
        let b: Vec<i64> = (0..k).map(|_| rng.gen_range(2..=bmax)).collect();
        if let Ok(c) = CuspSequence::new(b) {
            return c;
        }
    }
}

pub fn duality_sweep(kmax: usize, bmax: i64) -> Outcome {
    let seqs = all_sequences(kmax, bmax);
    let witness = seqs.iter().find_map(|c| {
        let r = check_duality(c);
        let tr = r.m.trace();
        (!r.t_identity_holds || !r.traces_equal || tr < BigInt::from(3))
            .then(|| format!("{c}: MT={} TM*={} trace={tr}", r.mt, r.tm_star))
    });
    Outcome { name: "MT = TM* and trace >= 3", cases: seqs.len(), witness }
}

pub fn roundtrip(count: usize, kmax: usize, bmax: i64, seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut witness = None;
    for _ in 0..count {
        let c = random_sequence(&mut rng, kmax, bmax);
        match recover_sequence(&monodromy(&c)) {
            Ok(r) if r.is_rotation_of(&c) => {}
            other => {
                witness = Some(format!("{c} -> {other:?}"));
                break;
            }
        }
    }
    Outcome { name: "recover(monodromy(b)) is a rotation of b", cases: count, witness }
}

pub fn cusp_cycles_definite(kmax: usize, bmax: i64) -> Outcome {
    let seqs = all_sequences(kmax, bmax);
    let witness = seqs.iter().find_map(|c| {
        let eulers: Vec<i64> = c.terms().iter().map(|b| -b).collect();
        let g = PlumbingGraph::cycle("e", &eulers);
        (!is_negative_definite(&intersection_matrix(&g))).then(|| c.to_string())
    });
    Outcome { name: "cusp cycles are negative definite", cases: seqs.len(), witness }
}

pub fn mckay_families() -> Outcome {
    let mut groups: Vec<(String, Vec<crate::quotient::Element>, usize)> = Vec::new();
    for m in 1..=12 {
        groups.push((format!("Z/{m}"), presets::cyclic(m), m));
    }
    for n in 2..=6 {
        groups.push((format!("BD{}", 4 * n), presets::binary_dihedral(n), n + 3));
    }
    groups.push(("2T".into(), presets::binary_tetrahedral(), 7));
    groups.push(("2O".into(), presets::binary_octahedral(), 8));
    groups.push(("2I".into(), presets::binary_icosahedral(), 9));
    let cases = groups.len();
    let mut witness = None;
    for (name, gens, classes) in groups {
        let res = group_closure(&gens).and_then(|g| {
            let count = conjugacy_classes(&g).count();
            mckay_report(&g).map(|r| (count, r))
        });
        match res {
            Ok((count, r)) if count == classes && r.matches => {}
            Ok((count, r)) => {
                witness = Some(format!("{name}: {count} classes, {r}"));
                break;
            }
            Err(e) => {
                witness = Some(format!("{name}: {e}"));
                break;
            }
        }
    }
    Outcome { name: "class counts and McKay offsets", cases, witness }
}

pub fn cyclic_label_counts(mmax: i64, nmax: u64) -> Outcome {
    let mut cases = 0;
    let mut witness = None;
    'outer: for m in 1..=mmax {
        for q in 0..m.max(1) {
            let (m, q) = (BigInt::from(m), BigInt::from(q));
            let Ok(_) = cyclic_quotient_components(&m, &q, 1) else { continue };
            for n in 1..=nmax {
                cases += 1;
                let labels = cyclic_quotient_components(&m, &q, n).expect("valid pair");
                if BigInt::from(labels.len()) != &m * BigInt::from(n) {
                    witness = Some(format!("m={m} q={q} N={n}: {} labels", labels.len()));
                    break 'outer;
                }
            }
        }
    }
    Outcome { name: "cyclic label count is N m", cases, witness }
}

pub fn chain_systems(count: usize, seed: u64) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut witness = None;
    for _ in 0..count {
        let s = rng.gen_range(1..=6usize);
        let b: Vec<i64> = (0..s).map(|_| rng.gen_range(2..=6)).collect();
        let i = rng.gen_range(0..s);
        let j = rng.gen_range(i + 1..=s);
        let ni = BigInt::from(rng.gen_range(0..=20));
        let ni1 = BigInt::from(rng.gen_range(1..=20));
        match chain_system_solvable(&b, i, j, &ni, &ni1) {
            Ok(false) => {}
            other => {
                witness = Some(format!("b={b:?} i={i} j={j} n=({ni},{ni1}): {other:?}"));
                break;
            }
        }
    }
    Outcome { name: "chain systems have no solution", cases: count, witness }
}

pub fn run_all() -> Vec<Outcome> {
    vec![
        duality_sweep(6, 6),
        roundtrip(500, 8, 9, 7),
        cusp_cycles_definite(6, 6),
        mckay_families(),
        cyclic_label_counts(12, 3),
        chain_systems(200, 11),
    ]
}
