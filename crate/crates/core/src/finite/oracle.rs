//! Brute-force checks over finite algebras: isomorphism search between a
//! module and its bidual, the reflexivity criterion, and sampling.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::algebra::FiniteAlgebra;
use super::exec::Exec;
use super::linalg::FpMatrix;
use super::module::{evaluation_map, finite_dual, hom_space, lemma_check_finite, FiniteModule};
use crate::error::Result;

pub const RANDOM_DRAWS: usize = 10_000;
pub const EXHAUSTIVE_CAP: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Found(FpMatrix),
    /// Proven absent; the string names the invariant or search that decided it.
    Absent(String),
    Inconclusive,
}

impl IsoOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            IsoOutcome::Found(_) => "found",
            IsoOutcome::Absent(_) => "absent",
            IsoOutcome::Inconclusive => "inconclusive",
        }
    }
}

/// Isomorphism invariants, compared before any search.
#[derive(Debug, PartialEq, Eq)]
struct Fingerprint {
    dim: usize,
    annihilator: Vec<Vec<u64>>,
    dual_dim: usize,
    top: usize,
    socle: usize,
    from_simples: Vec<usize>,
    to_simples: Vec<usize>,
}

fn fingerprint(m: &FiniteModule, simples: &[FiniteModule]) -> Fingerprint {
    Fingerprint {
        dim: m.dim(),
        annihilator: m.annihilator(),
        dual_dim: finite_dual(m).module.dim(),
        top: m.top_dim(),
        socle: m.socle_dim(),
        from_simples: simples.iter().map(|s| hom_space(s, m).len()).collect(),
        to_simples: simples.iter().map(|s| hom_space(m, s).len()).collect(),
    }
}

fn combination(basis: &[FpMatrix], coeffs: &[u64]) -> FpMatrix {
    let first = &basis[0];
    let mut acc = FpMatrix::zeros(first.modulus(), first.rows(), first.cols());
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}

fn digits(mut idx: u64, p: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = idx % p;
            idx /= p;
            d
        })
        .collect()
}

/// An invertible `A`-linear map `M -> N`, if one exists.
pub fn iso_search(
    m: &FiniteModule,
    n: &FiniteModule,
    rng: &mut impl Rng,
    exec: Exec,
) -> IsoOutcome {
    if m.dim() != n.dim() {
        return IsoOutcome::Absent("dimension".into());
    }
    if m.dim() == 0 {
        return IsoOutcome::Found(FpMatrix::zeros(m.p(), 0, 0));
    }
    let simples = FiniteModule::simple_modules(m.algebra());
    if fingerprint(m, &simples) != fingerprint(n, &simples) {
        return IsoOutcome::Absent("invariants".into());
    }
    let basis = hom_space(m, n);
    let end_m = hom_space(m, m).len();
    if basis.len() != end_m || hom_space(n, n).len() != end_m {
        return IsoOutcome::Absent("hom dimensions".into());
    }
    let p = m.p();
    let h = basis.len();
    for _ in 0..RANDOM_DRAWS {
        let c: Vec<u64> = (0..h).map(|_| rng.gen_range(0..p)).collect();
        let f = combination(&basis, &c);
        if f.is_invertible() {
            return IsoOutcome::Found(f);
        }
    }
    let total = match p.checked_pow(h as u32) {
        Some(t) if t <= EXHAUSTIVE_CAP => t,
        _ => return IsoOutcome::Inconclusive,
    };
    match exec.find_first(total, |i| {
        combination(&basis, &digits(i, p, h)).is_invertible()
    }) {
        Some(i) => IsoOutcome::Found(combination(&basis, &digits(i, p, h))),
        None => IsoOutcome::Absent("exhaustive search".into()),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PropositionReport {
    pub module_dim: usize,
    pub dual_dim: usize,
    pub bidual_dim: usize,
    pub h_invertible: bool,
    pub iso: &'static str,
    /// `None` when the search was inconclusive.
    pub consistent: Option<bool>,
    pub coker_dim: usize,
    /// `X / J X = 0` exactly when `X = 0`, for `X = coker h`.
    pub nakayama: bool,
    /// `M*` is a direct summand of `M***` through the lemma retraction.
    pub dual_splits: bool,
}

impl PropositionReport {
    pub fn ok(&self) -> bool {
        self.consistent != Some(false) && self.nakayama && self.dual_splits
    }
}

pub fn proposition_check(
    m: &FiniteModule,
    rng: &mut impl Rng,
    exec: Exec,
) -> Result<PropositionReport> {
    let dual = finite_dual(m);
    let bidual = finite_dual(&dual.module);
    let h = evaluation_map(&dual, &bidual)?;
    let h_invertible = h.is_invertible();
    let iso = iso_search(m, &bidual.module, rng, exec);
    let consistent = match iso {
        IsoOutcome::Found(_) => Some(h_invertible),
        IsoOutcome::Absent(_) => Some(!h_invertible),
        IsoOutcome::Inconclusive => None,
    };
    let image: Vec<Vec<u64>> = (0..h.cols()).map(|j| h.column(j)).collect();
    let (x, _) = bidual.module.quotient(&image);
    let top_of_x = x.top_dim();
    Ok(PropositionReport {
        module_dim: m.dim(),
        dual_dim: dual.module.dim(),
        bidual_dim: bidual.module.dim(),
        h_invertible,
        iso: iso.label(),
        consistent,
        coker_dim: x.dim(),
        nakayama: (top_of_x == 0) == (x.dim() == 0),
        dual_splits: lemma_check_finite(m)?,
    })
}

/// Algebras of dimension at most 4 over `GF(p)`: truncated polynomial
/// rings, two square-zero-type quotients in two variables, and products.
pub fn corpus_algebras(p: u64) -> Vec<Arc<FiniteAlgebra>> {
    let field = FiniteAlgebra::field(p).expect("prime");
    let t = |n| FiniteAlgebra::truncated(p, n).expect("finite");
    let mxy = FiniteAlgebra::monomial_quotient(
        format!("GF({p})[x,y]/(x^2,xy,y^2)"),
        p,
        2,
        &[vec![2, 0], vec![1, 1], vec![0, 2]],
    )
    .expect("finite");
    let x2y2 = FiniteAlgebra::monomial_quotient(
        format!("GF({p})[x,y]/(x^2,y^2)"),
        p,
        2,
        &[vec![2, 0], vec![0, 2]],
    )
    .expect("finite");
    let prod =
        |a: &FiniteAlgebra, b: &FiniteAlgebra| FiniteAlgebra::product(a, b).expect("same field");
    let kk = prod(&field, &field);
    let algebras = vec![
        field.clone(),
        t(2),
        t(3),
        t(4),
        mxy.clone(),
        x2y2,
        kk.clone(),
        prod(&kk, &field),
        prod(&prod(&kk, &field), &field),
        prod(&field, &t(2)),
        prod(&field, &t(3)),
        prod(&t(2), &t(2)),
        prod(&kk, &t(2)),
        prod(&field, &mxy),
    ];
    algebras.into_iter().map(Arc::new).collect()
}

#[derive(Clone, Debug)]
pub struct Case {
    pub id: usize,
    pub label: String,
    pub module: FiniteModule,
}

const MAX_MODULE_DIM: usize = 4;

/// Regular, simple, semisimple-top, small sums and duals of those, for every corpus algebra.
pub fn fixed_cases() -> Vec<Case> {
    let mut out: Vec<(String, FiniteModule)> = Vec::new();
    for p in [2, 3] {
        for a in corpus_algebras(p) {
            let reg = FiniteModule::regular(&a);
            let simples = FiniteModule::simple_modules(&a);
            let (top, _) = reg.quotient(&a.jacobson_radical());
            let mut mods = vec![("A".to_string(), reg.clone()), ("A/J".to_string(), top)];
            for (i, s) in simples.iter().enumerate() {
                mods.push((format!("S{i}"), s.clone()));
                mods.push((format!("A+S{i}"), reg.direct_sum(s)));
                mods.push((format!("S{i}+S{i}"), s.direct_sum(s)));
                mods.push((format!("S{i}*"), finite_dual(s).module));
            }
            for (name, m) in mods {
                if (1..=MAX_MODULE_DIM).contains(&m.dim()) {
                    out.push((format!("{a} : {name}"), m));
                }
            }
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(id, (label, module))| Case { id, label, module })
        .collect()
}

/// A quotient of `A^r` by a random submodule, of dimension `1..=max_dim`.
pub fn random_module(a: &Arc<FiniteAlgebra>, rng: &mut impl Rng, max_dim: usize) -> FiniteModule {
    let p = a.characteristic();
    for _ in 0..64 {
        let r = rng.gen_range(1..=2);
        let free = FiniteModule::free(a, r);
        let ngens = rng.gen_range(0..=3);
        let gens: Vec<Vec<u64>> = (0..ngens)
            .map(|_| (0..free.dim()).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        let (q, _) = free.quotient(&gens);
        if (1..=max_dim).contains(&q.dim()) {
            return q;
        }
    }
    FiniteModule::simple_modules(a).remove(0)
}

pub fn case_rng(seed: u64, id: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (id as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// A random (algebra, module) pair; sums and duals appear with small probability.
pub fn random_case(seed: u64, id: usize) -> Case {
    let mut rng = case_rng(seed, id);
    let p = if rng.gen_bool(0.5) { 2 } else { 3 };
    let algebras = corpus_algebras(p);
    let a = algebras[rng.gen_range(0..algebras.len())].clone();
    let mut m = random_module(&a, &mut rng, MAX_MODULE_DIM);
    let mut label = format!("{a} : random");
    match rng.gen_range(0..4) {
        0 => {
            let extra = random_module(&a, &mut rng, MAX_MODULE_DIM);
            if m.dim() + extra.dim() <= MAX_MODULE_DIM {
                m = m.direct_sum(&extra);
                label.push_str(" sum");
            }
        }
        1 => {
            let d = finite_dual(&m).module;
            if (1..=MAX_MODULE_DIM).contains(&d.dim()) {
                m = d;
                label.push_str(" dual");
            }
        }
        _ => {}
    }
    Case {
        id,
        label,
        module: m,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub id: usize,
    pub algebra: String,
    pub characteristic: u64,
    pub algebra_dim: usize,
    pub label: String,
    #[serde(flatten)]
    pub report: PropositionReport,
    pub lemma: bool,
    pub ok: bool,
}

pub fn check_case(case: &Case, seed: u64) -> Result<CaseRecord> {
    let mut rng = case_rng(seed.rotate_left(17), case.id);
    // Search inside one case stays sequential: cases already run in parallel.
    let report = proposition_check(&case.module, &mut rng, Exec::Sequential)?;
    let lemma = report.dual_splits;
    let a = case.module.algebra();
    Ok(CaseRecord {
        id: case.id,
        algebra: a.name().to_string(),
        characteristic: a.characteristic(),
        algebra_dim: a.dim(),
        label: case.label.clone(),
        ok: report.ok(),
        lemma,
        report,
    })
}

/// Runs every case; records come back sorted by id.
pub fn run_cases(cases: &[Case], seed: u64, exec: Exec) -> Result<Vec<CaseRecord>> {
    let mut out = exec
        .map(cases, |c| check_case(c, seed))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|r| r.id);
    Ok(out)
}

/// The fixed corpus followed by `random` seeded cases.
pub fn oracle_cases(seed: u64, random: usize) -> Vec<Case> {
    let mut cases = fixed_cases();
    let start = cases.len();
    cases.extend((0..random).map(|i| random_case(seed, start + i)));
    cases
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct OracleSummary {
    pub cases: usize,
    pub consistent: usize,
    pub inconsistent: usize,
    pub inconclusive: usize,
    pub lemma_failures: usize,
    pub inconclusive_rate: f64,
}

pub fn summarize(records: &[CaseRecord]) -> OracleSummary {
    let count = |f: &dyn Fn(&CaseRecord) -> bool| records.iter().filter(|r| f(r)).count();
    let inconclusive = count(&|r| r.report.consistent.is_none());
    OracleSummary {
        cases: records.len(),
        consistent: count(&|r| r.report.consistent == Some(true)),
        inconsistent: count(&|r| r.report.consistent == Some(false)),
        inconclusive,
        lemma_failures: count(&|r| !r.lemma),
        inconclusive_rate: if records.is_empty() {
            0.0
        } else {
            inconclusive as f64 / records.len() as f64
        },
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DedekindReport {
    pub samples: usize,
    pub attempts: usize,
    pub violations: usize,
}

/// Draws `(a, b)` with `ab = 1` in random finite rings (corpus algebras,
/// their pairwise products, and 2x2 / 3x3 matrix rings) and checks `ba = 1`.
pub fn dedekind_probe(seed: u64, samples: usize) -> DedekindReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rings: Vec<Arc<FiniteAlgebra>> = Vec::new();
    for p in [2, 3] {
        let base = corpus_algebras(p);
        rings.extend(base.iter().cloned());
        for a in base.iter().take(6) {
            for b in base.iter().take(6) {
                rings.push(Arc::new(FiniteAlgebra::product(a, b).expect("same field")));
            }
        }
    }
    let mut report = DedekindReport {
        samples: 0,
        attempts: 0,
        violations: 0,
    };
    while report.samples < samples {
        report.attempts += 1;
        let pick = rng.gen_range(0..rings.len() + 2);
        let ok = if pick < rings.len() {
            let a = &rings[pick];
            let p = a.characteristic();
            let x: Vec<u64> = (0..a.dim()).map(|_| rng.gen_range(0..p)).collect();
            // ab = 1 means L_a b = 1.
            match a.left_mult(&x).solve(a.unit()) {
                Some(y) => a.mul(&y, &x) == a.unit(),
                None => continue,
            }
        } else {
            let n = pick - rings.len() + 2;
            let p = if rng.gen_bool(0.5) { 2 } else { 3 };
            let rows: Vec<Vec<u64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
                .collect();
            let x = FpMatrix::from_rows(p, &rows);
            let id = FpMatrix::identity(p, n);
            let cols: Option<Vec<Vec<u64>>> = (0..n).map(|j| x.solve(&id.column(j))).collect();
            match cols {
                Some(cols) => FpMatrix::from_columns(p, n, &cols).mul(&x).is_identity(),
                None => continue,
            }
        };
        report.samples += 1;
        if !ok {
            report.violations += 1;
        }
    }
    report
}
