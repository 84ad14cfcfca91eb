//! Independent re-computation and randomized theorem checks.
//!
//! [`naive_series`] rebuilds the three characteristic series from raw
//! generator lists with its own elimination routine, so it shares no
//! canonicalization code with [`crate::series`] until the final comparison.
//! [`verify_theorems`] samples ideals by closing random small-integer vectors
//! and checks the structural statements about perfect, near perfect and upper
//! bounded ideals on them. Coverage is heuristic: the ideal lattice over Q is
//! usually infinite, so a clean report certifies the sampled ideals only.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{LieAlgebra, StructureConstants};
use crate::catalog;
use crate::linalg::{is_zero_vector, rat, unit_vector, zero_vector, Rational, Vector};
use crate::series::{self, embed, SeriesKind, SeriesReport};
use crate::subspace::Subspace;

fn mix(seed: u64, k: u64) -> u64 {
    // splitmix64 step
    let mut z = seed ^ k.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Ideal closure of one or two sparse random vectors with entries in
/// `-2..=2`. Deterministic in `seed`.
pub fn random_ideal(l: &LieAlgebra, seed: u64) -> Subspace {
    let n = l.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=2);
    let vectors: Vec<Vector> = (0..count)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        Rational::zero()
                    } else {
                        rat(rng.gen_range(-2..=2))
                    }
                })
                .collect()
        })
        .collect();
    l.ideal_closure(&vectors)
        .expect("vectors have the algebra's dimension")
}

/// `samples` random ideals plus `0` and `L`, without repeats, in first-seen
/// order.
pub fn sample_ideals(l: &LieAlgebra, samples: usize, seed: u64) -> Vec<Subspace> {
    let mut pool = vec![l.zero_ideal(), l.full()];
    pool.extend((0..samples as u64).map(|k| random_ideal(l, mix(seed, k))));
    dedup(pool)
}

fn dedup(items: Vec<Subspace>) -> Vec<Subspace> {
    let mut seen = BTreeSet::new();
    items
        .into_iter()
        .filter(|s| seen.insert(s.clone()))
        .collect()
}

/// A random Lie algebra of dimension 1 to 4 with structure constants in
/// `-2..=2`: either a catalog table or the zero table, with up to three
/// brackets overwritten, kept only if it passes validation.
pub fn random_algebra(seed: u64) -> LieAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let small: Vec<LieAlgebra> = catalog::all()
        .into_iter()
        .map(|e| e.algebra)
        .filter(|a| a.dim() <= 4)
        .collect();
    loop {
        // Higher dimensions are rejected more often; draw them more often.
        let n = [1, 2, 2, 3, 3, 3, 4, 4, 4, 4][rng.gen_range(0..10)];
        let bases: Vec<&LieAlgebra> = small.iter().filter(|a| a.dim() == n).collect();
        let mut constants = if !bases.is_empty() && rng.gen_bool(0.5) {
            bases[rng.gen_range(0..bases.len())].constants().clone()
        } else {
            StructureConstants::zero(n)
        };
        if n >= 2 {
            let edits = rng.gen_range(0..=3);
            let mut table: Vec<Rational> = dense(&constants);
            for _ in 0..edits {
                let i = rng.gen_range(0..n - 1);
                let j = rng.gen_range(i + 1..n);
                let k = rng.gen_range(0..n);
                let v = rat(rng.gen_range(-2..=2));
                table[(i * n + j) * n + k] = v.clone();
                table[(j * n + i) * n + k] = -v;
            }
            constants = StructureConstants::from_dense(n, table).expect("table has n^3 entries");
        }
        if let Ok(l) = LieAlgebra::with_default_labels(constants) {
            if l.validate().is_valid() {
                return l;
            }
        }
    }
}

pub fn random_corpus(count: usize, seed: u64) -> Vec<LieAlgebra> {
    (0..count as u64)
        .map(|k| random_algebra(mix(seed, k)))
        .collect()
}

fn dense(c: &StructureConstants) -> Vec<Rational> {
    let n = c.dim();
    let mut t = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            t.extend_from_slice(c.bracket_of_basis(i, j));
        }
    }
    t
}

// ---------------------------------------------------------------------------
// Naive series

/// Row echelon form by plain Gaussian elimination (no pivot normalization,
/// no back elimination). Returns the nonzero echelon rows and pivot columns.
fn naive_echelon(vectors: &[Vector]) -> (Vec<Vector>, Vec<usize>) {
    let mut rows: Vec<Vector> = vectors.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        let Some(p) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let (head, tail) = rows.split_at_mut(top + 1);
        let pivot_row = &head[top];
        for row in tail.iter_mut().filter(|row| !row[col].is_zero()) {
            let f = &row[col] / &pivot_row[col];
            for (e, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *e -= &f * p;
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    (rows, pivots)
}

fn naive_rank(vectors: &[Vector]) -> usize {
    naive_echelon(vectors).1.len()
}

/// Keeps the vectors that raise the rank, unmodified.
fn naive_thin(vectors: Vec<Vector>) -> Vec<Vector> {
    let mut kept: Vec<Vector> = Vec::new();
    for v in vectors {
        if is_zero_vector(&v) {
            continue;
        }
        kept.push(v);
        if naive_rank(&kept) < kept.len() {
            kept.pop();
        }
    }
    kept
}

fn naive_same_span(a: &[Vector], b: &[Vector]) -> bool {
    let ra = naive_rank(a);
    let rb = naive_rank(b);
    let union: Vec<Vector> = a.iter().chain(b).cloned().collect();
    ra == rb && naive_rank(&union) == ra
}

/// Kernel of `rows · x = 0` by echelon form and back substitution.
fn naive_kernel(rows: &[Vector], cols: usize) -> Vec<Vector> {
    let (ech, pivots) = if rows.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        naive_echelon(rows)
    };
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = zero_vector(cols);
            x[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate().rev() {
                let mut s = Rational::zero();
                for c in p + 1..cols {
                    if !ech[r][c].is_zero() && !x[c].is_zero() {
                        s += &ech[r][c] * &x[c];
                    }
                }
                x[p] = -s / &ech[r][p];
            }
            x
        })
        .collect()
}

fn naive_bracket(l: &LieAlgebra, x: &[Rational], y: &[Rational]) -> Vector {
    let n = l.dim();
    let mut out = zero_vector(n);
    for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let xy = xi * yj;
            for (k, o) in out.iter_mut().enumerate() {
                let c = l.constants().get(i, j, k);
                if !c.is_zero() {
                    *o += &xy * c;
                }
            }
        }
    }
    out
}

/// `{x : [x, e_j] ∈ span(gens) for all j}` by solving for `x` together with
/// the coefficients expressing each `[x, e_j]` in `gens`.
fn naive_upper_extension(l: &LieAlgebra, gens: &[Vector]) -> Vec<Vector> {
    let n = l.dim();
    let m = gens.len();
    let unknowns = n + n * m;
    let mut rows = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            let mut row = zero_vector(unknowns);
            for (i, slot) in row.iter_mut().enumerate().take(n) {
                *slot = l.constants().get(i, j, k).clone();
            }
            for (g, gen) in gens.iter().enumerate() {
                row[n + j * m + g] = -gen[k].clone();
            }
            rows.push(row);
        }
    }
    let kernel = naive_kernel(&rows, unknowns);
    naive_thin(kernel.into_iter().map(|v| v[..n].to_vec()).collect())
}

/// The series recomputed from generator lists. Brackets are taken over all
/// ordered pairs of generators; generator lists are thinned to independent
/// subsets between steps but never put in echelon form.
pub fn naive_series(l: &LieAlgebra, kind: SeriesKind) -> SeriesReport {
    let n = l.dim();
    let basis: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut terms: Vec<Vec<Vector>> = vec![match kind {
        SeriesKind::UpperCentral => Vec::new(),
        _ => basis.clone(),
    }];
    loop {
        let current = terms.last().unwrap();
        let next = match kind {
            SeriesKind::Derived => naive_thin(
                current
                    .iter()
                    .flat_map(|a| current.iter().map(move |b| naive_bracket(l, a, b)))
                    .collect(),
            ),
            SeriesKind::LowerCentral => naive_thin(
                basis
                    .iter()
                    .flat_map(|a| current.iter().map(move |b| naive_bracket(l, a, b)))
                    .collect(),
            ),
            SeriesKind::UpperCentral => naive_upper_extension(l, current),
        };
        if naive_same_span(&next, current) {
            break;
        }
        terms.push(next);
    }
    SeriesReport {
        kind,
        terms: terms
            .iter()
            .map(|g| Subspace::span(g, n).expect("generators have length n"))
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// Theorem checks

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    /// No sampled instance met the hypothesis.
    Vacuous,
    Violated,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Vacuous => "vacuous",
            Status::Violated => "violated",
        }
    }
}

/// Everything needed to replay a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub description: String,
    pub subspaces: Vec<(String, Subspace)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: Status,
    /// Number of sampled instances that met the hypothesis.
    pub instances: usize,
    pub detail: Option<String>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub dim: usize,
    pub samples: usize,
    pub seed: u64,
    pub distinct_ideals: usize,
    pub checks: Vec<TheoremCheck>,
}

impl TheoremReport {
    pub fn get(&self, id: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn violations(&self) -> Vec<&TheoremCheck> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Violated)
            .collect()
    }

    pub fn all_hold(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Check identifiers, in report order.
pub const CHECK_IDS: [&str; 17] = [
    "perfect_sum",
    "solvable_iff_p_zero",
    "p_contains_perfect",
    "perfect_extension",
    "quotient_by_p_solvable",
    "near_perfect_sum",
    "nilpotent_iff_np_zero",
    "np_contains_near_perfect",
    "near_perfect_extension",
    "quotient_by_np_nilpotent",
    "upper_bounded_meet",
    "smallest_upper_bounded",
    "nilpotent_unique_upper_bounded",
    "radical_of_p",
    "radical_bracket_nilpotent",
    "radical_largest_solvable",
    "naive_series_agree",
];

struct Check {
    id: &'static str,
    statement: &'static str,
    instances: usize,
    detail: Option<String>,
    witness: Option<Witness>,
}

impl Check {
    fn new(id: &'static str, statement: &'static str) -> Self {
        Self {
            id,
            statement,
            instances: 0,
            detail: None,
            witness: None,
        }
    }

    /// Records one instance; the first failure becomes the witness.
    fn expect(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.instances += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self) -> TheoremCheck {
        let status = if self.witness.is_some() {
            Status::Violated
        } else if self.instances == 0 {
            Status::Vacuous
        } else {
            Status::Holds
        };
        TheoremCheck {
            id: self.id,
            statement: self.statement,
            status,
            instances: self.instances,
            detail: self.detail,
            witness: self.witness,
        }
    }
}

fn witness(description: impl Into<String>, subspaces: &[(&str, &Subspace)]) -> Witness {
    Witness {
        description: description.into(),
        subspaces: subspaces
            .iter()
            .map(|(n, s)| (n.to_string(), (*s).clone()))
            .collect(),
    }
}

fn limit(start: &Subspace, mut step: impl FnMut(&Subspace) -> Subspace) -> Subspace {
    let mut t = start.clone();
    loop {
        let next = step(&t);
        if next == t {
            return t;
        }
        t = next;
    }
}

fn is_nilpotent_sub(l: &LieAlgebra, s: &Subspace) -> bool {
    series::is_nilpotent(&l.restrict(s).expect("ideals are subalgebras"))
}

fn pairs(items: &[Subspace]) -> impl Iterator<Item = (&Subspace, &Subspace)> {
    items
        .iter()
        .enumerate()
        .flat_map(move |(a, i)| items[a..].iter().map(move |j| (i, j)))
}

/// Runs every check on `l` using `samples` random ideals drawn from `seed`.
pub fn verify_theorems(l: &LieAlgebra, samples: usize, seed: u64) -> TheoremReport {
    let n = l.dim();
    let full = l.full();
    let pool = sample_ideals(l, samples, seed);

    let p = series::perfect_radical(l);
    let np = series::near_perfect_radical(l);
    let r = series::radical(l);
    let u_m = series::smallest_upper_bounded_ideal(l);

    // Solvability and nilpotency read off the naive series, so the
    // characterization checks compare two independent computations.
    let naive_solvable = naive_series(l, SeriesKind::Derived).limit().is_zero();
    let naive_nilpotent = naive_series(l, SeriesKind::LowerCentral).limit().is_zero();

    let perfect_pool = dedup(
        pool.iter()
            .flat_map(|i| {
                let d = limit(i, |t| l.bracket_spaces(t, t).unwrap());
                [i.clone(), d]
            })
            .filter(|i| series::is_perfect_ideal(l, i).unwrap_or(false))
            .collect(),
    );
    let near_pool = dedup(
        pool.iter()
            .flat_map(|i| {
                let d = limit(i, |t| l.bracket_with_full(t).unwrap());
                [i.clone(), d]
            })
            .filter(|i| series::is_near_perfect_ideal(l, i).unwrap_or(false))
            .collect(),
    );
    let upper_pool = dedup(
        pool.iter()
            .map(|i| limit(i, |t| series::upper_extension(l, t).unwrap()))
            .collect(),
    );
    let solvable_pool: Vec<Subspace> = pool
        .iter()
        .filter(|i| series::is_solvable_subalgebra(l, i).unwrap())
        .cloned()
        .collect();

    let mut checks = Vec::new();

    let mut c = Check::new("perfect_sum", "sum of perfect ideals is a perfect ideal");
    for (i, j) in pairs(&perfect_pool) {
        if i.is_zero() && j.is_zero() {
            continue;
        }
        let s = i.sum(j).unwrap();
        let ok = l.is_ideal(&s) && series::is_perfect_ideal(l, &s).unwrap();
        c.expect(ok, || {
            witness(
                "I + J is not a perfect ideal",
                &[("I", i), ("J", j), ("I+J", &s)],
            )
        });
    }
    checks.push(c.finish());

    let mut c = Check::new("solvable_iff_p_zero", "nonzero L is solvable iff P(L) = 0");
    if n > 0 {
        c.expect(naive_solvable == p.is_zero(), || {
            witness(
                format!("naive solvable = {naive_solvable}"),
                &[("P(L)", &p)],
            )
        });
        for i in perfect_pool.iter().filter(|i| !i.is_zero()) {
            c.expect(!naive_solvable, || {
                witness("solvable algebra has a nonzero perfect ideal", &[("I", i)])
            });
        }
    }
    checks.push(c.finish());

    let mut c = Check::new(
        "p_contains_perfect",
        "P(L) is perfect and contains every perfect ideal",
    );
    c.expect(series::is_perfect_ideal(l, &p).unwrap(), || {
        witness("P(L) is not perfect", &[("P(L)", &p)])
    });
    for i in &perfect_pool {
        c.expect(i.leq(&p).unwrap(), || {
            witness("perfect ideal outside P(L)", &[("I", i), ("P(L)", &p)])
        });
    }
    checks.push(c.finish());

    let mut c = Check::new(
        "perfect_extension",
        "I perfect and L/I perfect imply L perfect",
    );
    let l_perfect = series::is_perfect(l);
    for i in &perfect_pool {
        let (q, _) = l.quotient(i).unwrap();
        if series::is_perfect(&q) {
            c.expect(l_perfect, || {
                witness("L/I perfect but L is not", &[("I", i)])
            });
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("quotient_by_p_solvable", "L/P(L) is solvable");
    let (q, _) = l.quotient(&p).unwrap();
    let q_solvable = naive_series(&q, SeriesKind::Derived).limit().is_zero();
    c.expect(q_solvable, || {
        witness("L/P(L) is not solvable", &[("P(L)", &p)])
    });
    checks.push(c.finish());

    let mut c = Check::new(
        "near_perfect_sum",
        "sum of near perfect ideals is near perfect",
    );
    for (i, j) in pairs(&near_pool) {
        if i.is_zero() && j.is_zero() {
            continue;
        }
        let s = i.sum(j).unwrap();
        let ok = l.is_ideal(&s) && series::is_near_perfect_ideal(l, &s).unwrap();
        c.expect(ok, || {
            witness(
                "I + J is not near perfect",
                &[("I", i), ("J", j), ("I+J", &s)],
            )
        });
    }
    checks.push(c.finish());

    let mut c = Check::new(
        "nilpotent_iff_np_zero",
        "nonzero L is nilpotent iff NP(L) = 0",
    );
    if n > 0 {
        c.expect(naive_nilpotent == np.is_zero(), || {
            witness(
                format!("naive nilpotent = {naive_nilpotent}"),
                &[("NP(L)", &np)],
            )
        });
        for i in near_pool.iter().filter(|i| !i.is_zero()) {
            c.expect(!naive_nilpotent, || {
                witness(
                    "nilpotent algebra has a nonzero near perfect ideal",
                    &[("I", i)],
                )
            });
        }
    }
    checks.push(c.finish());

    let mut c = Check::new(
        "np_contains_near_perfect",
        "NP(L) is near perfect, contains P(L) and every near perfect ideal",
    );
    c.expect(series::is_near_perfect_ideal(l, &np).unwrap(), || {
        witness("NP(L) is not near perfect", &[("NP(L)", &np)])
    });
    c.expect(p.leq(&np).unwrap(), || {
        witness("P(L) not inside NP(L)", &[("P(L)", &p), ("NP(L)", &np)])
    });
    for i in &near_pool {
        c.expect(i.leq(&np).unwrap(), || {
            witness(
                "near perfect ideal outside NP(L)",
                &[("I", i), ("NP(L)", &np)],
            )
        });
    }
    checks.push(c.finish());

    let mut c = Check::new(
        "near_perfect_extension",
        "I near perfect, I ⊆ J ideal, J/I near perfect in L/I imply J near perfect",
    );
    for (t, i) in near_pool.iter().enumerate() {
        let (q, proj) = l.quotient(i).unwrap();
        // Near perfect ideals of L/I: lower central limits of random ideals of L/I.
        let mut upstairs: Vec<Subspace> = (0..4u64)
            .map(|k| {
                let h = random_ideal(&q, mix(seed ^ 0x5A5A, (t as u64) * 16 + k));
                proj.preimage(&limit(&h, |s| q.bracket_with_full(s).unwrap()))
            })
            .collect();
        // Sampled ideals of L above I whose image is near perfect.
        for j in pool.iter().filter(|j| i.leq(j).unwrap()) {
            let image = Subspace::span(
                &j.basis_vectors().map(|v| proj.apply(v)).collect::<Vec<_>>(),
                q.dim(),
            )
            .unwrap();
            if series::is_near_perfect_ideal(&q, &image).unwrap() {
                upstairs.push(j.clone());
            }
        }
        for j in dedup(upstairs) {
            if i.is_zero() && j.is_zero() {
                continue;
            }
            let ok = l.is_ideal(&j) && series::is_near_perfect_ideal(l, &j).unwrap();
            c.expect(ok, || {
                witness("J/I near perfect but J is not", &[("I", i), ("J", &j)])
            });
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("quotient_by_np_nilpotent", "L/NP(L) is nilpotent");
    let (q, _) = l.quotient(&np).unwrap();
    let q_nilpotent = naive_series(&q, SeriesKind::LowerCentral).limit().is_zero();
    c.expect(q_nilpotent, || {
        witness("L/NP(L) is not nilpotent", &[("NP(L)", &np)])
    });
    checks.push(c.finish());

    let mut c = Check::new(
        "upper_bounded_meet",
        "intersection of upper bounded ideals is upper bounded",
    );
    for (i, j) in pairs(&upper_pool) {
        let h = i.intersect(j).unwrap();
        let ok = series::is_upper_bounded_ideal(l, &h).unwrap();
        c.expect(ok, || {
            witness(
                "I ∩ J is not upper bounded",
                &[("I", i), ("J", j), ("I∩J", &h)],
            )
        });
    }
    checks.push(c.finish());

    let mut c = Check::new(
        "smallest_upper_bounded",
        "U_m(0) is upper bounded and inside every upper bounded ideal",
    );
    c.expect(series::is_upper_bounded_ideal(l, &u_m).unwrap(), || {
        witness("U_m(0) is not upper bounded", &[("U_m(0)", &u_m)])
    });
    for i in &upper_pool {
        c.expect(u_m.leq(i).unwrap(), || {
            witness("U_m(0) not inside I", &[("U_m(0)", &u_m), ("I", i)])
        });
    }
    checks.push(c.finish());

    let mut c = Check::new(
        "nilpotent_unique_upper_bounded",
        "a nonzero nilpotent L has L as its only upper bounded ideal",
    );
    if n > 0 && naive_nilpotent {
        c.expect(u_m == full, || {
            witness("U_m(0) is not L", &[("U_m(0)", &u_m)])
        });
        for i in pool.iter().filter(|i| !i.is_full()) {
            let ok = !series::is_upper_bounded_ideal(l, i).unwrap();
            c.expect(ok, || witness("proper upper bounded ideal", &[("I", i)]));
        }
        c.detail = Some(format!("dim U_m(0) = {}", u_m.dim()));
    }
    checks.push(c.finish());

    let mut c = Check::new("radical_of_p", "R(P(L)) = R(L) ∩ P(L), and it is nilpotent");
    let rp = r.intersect(&p).unwrap();
    let restricted = l.restrict(&p).unwrap();
    let r_of_p = embed(&p, &series::radical(&restricted));
    c.expect(r_of_p == rp, || {
        witness(
            "R(P(L)) differs from R(L) ∩ P(L)",
            &[("R(P(L))", &r_of_p), ("R(L)∩P(L)", &rp)],
        )
    });
    c.expect(is_nilpotent_sub(l, &rp), || {
        witness("R(L) ∩ P(L) is not nilpotent", &[("R(L)∩P(L)", &rp)])
    });
    c.detail = Some(format!("dim P = {}, dim R∩P = {}", p.dim(), rp.dim()));
    checks.push(c.finish());

    let mut c = Check::new(
        "radical_bracket_nilpotent",
        "[L, R(L)] ⊆ R(L) and [L, R(L)] is nilpotent",
    );
    let lr = l.bracket_with_full(&r).unwrap();
    c.expect(lr.leq(&r).unwrap(), || {
        witness("[L,R] not inside R", &[("[L,R]", &lr), ("R(L)", &r)])
    });
    c.expect(is_nilpotent_sub(l, &lr), || {
        witness("[L,R] is not nilpotent", &[("[L,R]", &lr)])
    });
    checks.push(c.finish());

    let mut c = Check::new(
        "radical_largest_solvable",
        "R(L) = [L,L]^⊥ is a solvable ideal containing every solvable ideal",
    );
    c.expect(
        l.is_ideal(&r) && series::is_solvable(&l.restrict(&r).unwrap()),
        || witness("R(L) is not a solvable ideal", &[("R(L)", &r)]),
    );
    for i in &solvable_pool {
        c.expect(i.leq(&r).unwrap(), || {
            witness("solvable ideal outside R(L)", &[("I", i), ("R(L)", &r)])
        });
    }
    checks.push(c.finish());

    let mut c = Check::new(
        "naive_series_agree",
        "naive series agree with the optimized series",
    );
    for kind in SeriesKind::ALL {
        let fast = series::series(l, kind);
        let slow = naive_series(l, kind);
        c.expect(fast == slow, || Witness {
            description: format!("{kind} series differ"),
            subspaces: fast
                .terms
                .iter()
                .enumerate()
                .map(|(k, t)| (format!("fast[{k}]"), t.clone()))
                .chain(
                    slow.terms
                        .iter()
                        .enumerate()
                        .map(|(k, t)| (format!("naive[{k}]"), t.clone())),
                )
                .collect(),
        });
    }
    checks.push(c.finish());

    debug_assert!(checks.iter().map(|c| c.id).eq(CHECK_IDS));
    TheoremReport {
        dim: n,
        samples,
        seed,
        distinct_ideals: pool.len(),
        checks,
    }
}
