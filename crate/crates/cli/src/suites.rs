//! Invariant suites, numbered like the acceptance criteria.

use std::collections::BTreeMap;

use serde::Serialize;

use hecke_core::alcove::{
    block_criteria, canonical_orbit, reduced_path_sst_count, same_block, simplicity_certificate, LatticePoint,
    SimplicityCertificate,
};
use hecke_core::arith::{Matrix, RationalFunction as Rf};
use hecke_core::diamond::{
    check_adjoint_rewriting, check_diamond_block, check_layer_identities, check_straight_coefficients, classify,
    diamond_element, layer_product_identity, special_blocks, verify_embedding,
};
use hecke_core::hecke::{
    calibrate_labeling, central_scalar, murphy_eigenvalue, relations_hold, tensor_matrix, verify_presentation, GramForm,
    HeckeAlgebra, MatrixRep, PermutationModule, SeminormalBlock,
};
use hecke_core::idempotents::{is_evaluable, rank_vector, PathIdempotents};
use hecke_core::llt::{decomposition_matrix, decomposition_matrix_with, oracle_selfcheck, CanonicalBasis, DecompositionMatrix};
use hecke_core::tableaux::{l_equivalence_classes, tableaux_up_to_rows, Composition, Partition};
use hecke_core::{Error, Result};

/// Every comparison in the suites is exact; no numeric tolerance is used anywhere.
pub const EXACT_TOLERANCE: u64 = 0;

/// Largest partition size in the presentation, Murphy and idempotent suites.
pub const PRESENTATION_MAX_N: usize = 6;
pub const MODULE_MAX_N: usize = 5;
pub const MODULE_MAX_K: usize = 3;
pub const MURPHY_MAX_N: usize = 6;
pub const IDEMPOTENT_MAX_N: usize = 5;
pub const DIAMOND_MAX_D: i64 = 3;
pub const EMBEDDING_CASES: [(usize, usize, u32); 3] = [(2, 2, 2), (3, 2, 2), (2, 3, 2)];
pub const BLOCK_MAX_N: u32 = 10;
pub const BLOCK_MAX_K: usize = 4;
pub const BOUND_MAX_N: u32 = 12;
pub const SIMPLICITY_MAX_N: u32 = 12;
pub const ORACLE_MAX_N: u32 = 6;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub count: u64,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteOutcome {
    fn new(id: u8, name: &'static str, checks: Vec<Check>) -> Self {
        SuiteOutcome { id, name, passed: checks.iter().all(|c| c.passed), checks }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// `(id, name)` for every suite.
pub const SUITES: [(u8, &str); 10] = [
    (1, "presentation"),
    (2, "murphy"),
    (3, "idempotent"),
    (4, "diamond"),
    (5, "embedding"),
    (6, "block"),
    (7, "bound"),
    (8, "simplicity"),
    (9, "oracle"),
    (10, "sst"),
];

pub fn suite_id(name: &str) -> Option<u8> {
    SUITES.iter().find(|(id, n)| *n == name || id.to_string() == name).map(|(id, _)| *id)
}

pub fn run_suite(id: u8) -> Option<SuiteOutcome> {
    let name = SUITES.iter().find(|(i, _)| *i == id)?.1;
    let checks = match id {
        1 => presentation(),
        2 => murphy(),
        3 => idempotent(),
        4 => diamond(),
        5 => embedding(),
        6 => block(),
        7 => bound(&mut OracleCache::default()),
        8 => simplicity(&mut OracleCache::default()),
        9 => oracle(),
        10 => sst(),
        _ => return None,
    };
    Some(SuiteOutcome::new(id, name, checks))
}

/// Runs every suite, sharing decomposition matrices between suites 7 and 8.
pub fn run_all() -> Vec<SuiteOutcome> {
    let mut cache = OracleCache::default();
    SUITES
        .iter()
        .map(|&(id, name)| {
            let checks = match id {
                7 => bound(&mut cache),
                8 => simplicity(&mut cache),
                _ => return run_suite(id).unwrap(),
            };
            SuiteOutcome::new(id, name, checks)
        })
        .collect()
}

fn run(name: &str, f: impl FnOnce() -> Result<(u64, Option<String>)>) -> Check {
    match f() {
        Ok((count, None)) => Check { name: name.into(), passed: true, count, detail: String::new() },
        Ok((count, Some(why))) => Check { name: name.into(), passed: false, count, detail: why },
        Err(e) => Check { name: name.into(), passed: false, count: 0, detail: e.to_string() },
    }
}

fn first_failure(failures: &[String]) -> Option<String> {
    failures.first().map(|f| format!("{} failures, first: {f}", failures.len()))
}

fn presentation() -> Vec<Check> {
    let seminormal = run("seminormal", || {
        let mut n_blocks = 0;
        for n in 1..=PRESENTATION_MAX_N {
            let rep = MatrixRep::seminormal(n, None)?;
            if !verify_presentation(&rep)? {
                return Ok((n_blocks, Some(format!("relations fail for n = {n}"))));
            }
            n_blocks += rep.blocks().len() as u64;
        }
        Ok((n_blocks, None))
    });
    let permutation = run("permutation", || {
        let mut count = 0;
        for n in 1..=MODULE_MAX_N as u32 {
            for lambda in Partition::all_with_max_rows(n, MODULE_MAX_K) {
                let m = PermutationModule::new(&Composition(lambda.parts().to_vec()))?;
                if !relations_hold(&m.t_matrices()?, &Rf::x()) {
                    return Ok((count, Some(format!("relations fail on M^{lambda}"))));
                }
                count += 1;
            }
        }
        Ok((count, None))
    });
    let tensor = run("tensor", || {
        let mut count = 0;
        for k in 1..=MODULE_MAX_K {
            for n in 1..=MODULE_MAX_N {
                let ts: Vec<Matrix<Rf>> = (1..n).map(|i| tensor_matrix(k, n, i)).collect::<Result<_>>()?;
                if !relations_hold(&ts, &Rf::x()) {
                    return Ok((count, Some(format!("relations fail on V^{n}, dim V = {k}"))));
                }
                count += 1;
            }
        }
        Ok((count, None))
    });
    vec![seminormal, permutation, tensor]
}

/// Matrix of the word `T_{w_1} ... T_{w_r}` on a block.
fn word_matrix(block: &SeminormalBlock, word: &[usize]) -> Matrix<Rf> {
    let dim = block.dim();
    let mut m = Matrix::zeros(dim, dim, &Rf::zero());
    for s in 0..dim {
        let mut v = vec![Rf::zero(); dim];
        v[s] = Rf::one();
        for &i in word.iter().rev() {
            v = block.apply_t(i, &v);
        }
        for (r, c) in v.into_iter().enumerate() {
            m.set(r, s, c);
        }
    }
    m
}

fn murphy() -> Vec<Check> {
    let eigen = run("murphy-eigenvalues", || {
        let mut failures = Vec::new();
        let mut count = 0;
        for n in 2..=MURPHY_MAX_N as u32 {
            for lambda in Partition::all(n) {
                let block = SeminormalBlock::straight(&lambda)?;
                for i in 2..=n as usize {
                    let word: Vec<usize> = (1..i).rev().chain(1..i).collect();
                    let m = word_matrix(&block, &word);
                    for (s, t) in block.tableaux().iter().enumerate() {
                        count += 1;
                        for r in 0..block.dim() {
                            let expected = if r == s { murphy_eigenvalue(t, i)? } else { Rf::zero() };
                            if *m.get(r, s) != expected {
                                failures.push(format!("M_{i} on {t}"));
                            }
                        }
                    }
                }
            }
        }
        Ok((count, first_failure(&failures)))
    });
    let central = run("delta-squared", || {
        let mut failures = Vec::new();
        let mut count = 0;
        for n in 2..=MURPHY_MAX_N as u32 {
            let word: Vec<usize> = (0..n).flat_map(|_| 1..n as usize).collect();
            for lambda in Partition::all(n) {
                let block = SeminormalBlock::straight(&lambda)?;
                let scalar = central_scalar(&lambda);
                let ident = Matrix::identity(block.dim(), &Rf::zero());
                let delta = word_matrix(&block, &word);
                let mut prod = ident.clone();
                for i in 2..=n as usize {
                    prod = prod.mul(&block.murphy_diagonal(i));
                }
                if delta != ident.scale(&scalar) || prod != delta {
                    failures.push(format!("{lambda}"));
                }
                count += 1;
            }
        }
        Ok((count, first_failure(&failures)))
    });
    // the T_w-basis elements act by the same matrices
    let elements = run("algebra-elements", || {
        let mut failures = Vec::new();
        let mut count = 0;
        for n in 2..=4usize {
            let alg = HeckeAlgebra::generic(n)?;
            let delta = alg.delta_squared();
            for lambda in Partition::all(n as u32) {
                let block = SeminormalBlock::straight(&lambda)?;
                if block.image(&alg, &delta)? != Matrix::identity(block.dim(), &Rf::zero()).scale(&central_scalar(&lambda)) {
                    failures.push(format!("Delta^2 on {lambda}"));
                }
                for i in 2..=n {
                    if block.image(&alg, &alg.murphy(i)?)? != block.murphy_diagonal(i) {
                        failures.push(format!("M_{i} on {lambda}"));
                    }
                }
                count += 1;
            }
        }
        Ok((count, first_failure(&failures)))
    });
    vec![eigen, central, elements]
}

fn idempotent() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut cache: BTreeMap<usize, PathIdempotents> = BTreeMap::new();
    for n in 1..=IDEMPOTENT_MAX_N {
        cache.insert(n, PathIdempotents::new(n).expect("size within guard"));
    }
    checks.push(run("resolution-and-orthogonality", || {
        let mut failures = Vec::new();
        let mut count = 0;
        for n in 1..=IDEMPOTENT_MAX_N {
            let c = cache.get_mut(&n).unwrap();
            let ts = tableaux_up_to_rows(n as u32, n);
            let ps: Vec<_> = ts.iter().map(|t| c.path(t)).collect::<Result<_>>()?;
            let alg = c.algebra().clone();
            let mut sum = alg.zero();
            for p in &ps {
                sum.add_assign(p);
            }
            if sum != alg.one() {
                failures.push(format!("sum of p_t != 1 for n = {n}"));
            }
            let rep = MatrixRep::seminormal(n, None)?;
            for b in rep.blocks() {
                let images: Vec<Matrix<Rf>> = ps.iter().map(|p| b.image(&alg, p)).collect::<Result<_>>()?;
                for (a, pa) in images.iter().enumerate() {
                    for (c2, pc) in images.iter().enumerate() {
                        let prod = pa.mul(pc);
                        let ok = if a == c2 { prod == *pa } else { prod.is_zero() };
                        if !ok {
                            failures.push(format!("p_{} p_{} on {}", ts[a], ts[c2], b.outer()));
                        }
                        count += 1;
                    }
                }
            }
        }
        Ok((count, first_failure(&failures)))
    }));
    checks.push(run("rank-vectors", || {
        let mut failures = Vec::new();
        let mut count = 0;
        for n in 1..=IDEMPOTENT_MAX_N {
            let c = cache.get_mut(&n).unwrap();
            for t in tableaux_up_to_rows(n as u32, n) {
                let p = c.path(&t)?;
                let r = rank_vector(c.algebra(), &p, None)?;
                if r.0.iter().any(|(lambda, &v)| v != u64::from(lambda == t.shape())) {
                    failures.push(format!("{t}"));
                }
                count += 1;
            }
        }
        Ok((count, first_failure(&failures)))
    }));
    for l in [2u32, 3] {
        checks.push(run(&format!("orbit-evaluable-l{l}"), || {
            let mut failures = Vec::new();
            let mut count = 0;
            for n in 1..=IDEMPOTENT_MAX_N {
                let c = cache.get_mut(&n).unwrap();
                let mut witnessed = false;
                let mut nontrivial = false;
                for class in l_equivalence_classes(n as u32, l, n) {
                    let orbit = c.orbit(&class[0], l)?;
                    let mut sum = c.algebra().zero();
                    for t in &class {
                        sum.add_assign(&c.path(t)?);
                    }
                    if sum != orbit {
                        failures.push(format!("p_[{}] is not the sum over its class", class[0]));
                    }
                    if is_evaluable(c.algebra(), &orbit, l).is_err() {
                        failures.push(format!("p_[{}] has a pole at zeta_{l}", class[0]));
                    }
                    if class.len() > 1 {
                        nontrivial = true;
                        for t in &class {
                            if !witnessed {
                                let p = c.path(t)?;
                                witnessed = is_evaluable(c.algebra(), &p, l).is_err();
                            }
                        }
                    }
                    count += 1;
                }
                if nontrivial && !witnessed {
                    failures.push(format!("no non-evaluable p_t for n = {n}"));
                }
            }
            Ok((count, first_failure(&failures)))
        }));
    }
    checks
}

fn diamond() -> Vec<Check> {
    let mut checks = Vec::new();
    checks.push(run("closed-forms", || {
        let mut count = 0;
        for l in [2u32, 3] {
            for k in [2usize, 3] {
                for (block, _) in special_blocks(l, k, DIAMOND_MAX_D)? {
                    count += check_diamond_block(&block, l, k)? as u64;
                }
            }
        }
        Ok((count, None))
    }));
    checks.push(run("product-forms", || {
        let mut count = 0;
        for (l, n) in [(2u32, 4usize), (2, 5), (3, 6)] {
            let alg = HeckeAlgebra::with_parameter(n, hecke_core::arith::Poly::monomial(1))?;
            for offset in 0..=n - 2 * l as usize {
                diamond_element(&alg, offset, l)?;
                count += 1;
            }
        }
        Ok((count, None))
    }));
    checks.push(run("layer-identities", || {
        let mut count = 0;
        for l in [2u32, 3] {
            for k in [2usize, 3] {
                for (block, _) in special_blocks(l, k, 2)? {
                    for t in block.tableaux() {
                        if classify(t, l, k)?.d.is_some() {
                            check_layer_identities(&block, t, l, k)?;
                            count += 1;
                        }
                    }
                    count += check_adjoint_rewriting(&block, l, k)? as u64;
                }
            }
        }
        for r in 1..=4 {
            for s in 1..=4 {
                let (a, b) = layer_product_identity(r, s)?;
                if a != b {
                    return Ok((count, Some(format!("layer product r = {r}, s = {s}"))));
                }
                count += 1;
            }
        }
        Ok((count, None))
    }));
    checks.push(run("coefficients-at-root", || {
        let mut count = 0;
        for (l, k, inner) in [(2u32, 2usize, 3u32), (2, 3, 2), (3, 2, 3)] {
            let rep = check_straight_coefficients(l, k, inner)?;
            if !rep.consistent() {
                return Ok((count, Some(format!("{rep:?}"))));
            }
            count += (rep.diagonal_checked + rep.zero_pattern_checked + rep.squared_checked) as u64;
        }
        Ok((count, None))
    }));
    checks
}

fn embedding() -> Vec<Check> {
    EMBEDDING_CASES
        .iter()
        .map(|&(m, k, l)| {
            run(&format!("m{m}-k{k}-l{l}"), || {
                let rep = verify_embedding(m, k, l)?;
                let ok = rep.factorization_ok
                    && rep.identity_ok
                    && rep.dim_generic == rep.dim_expected
                    && rep.dim_at_root == rep.dim_expected;
                Ok((rep.range_dim as u64, (!ok).then(|| format!("{rep:?}"))))
            })
        })
        .collect()
}

fn block() -> Vec<Check> {
    vec![run("criteria-agree", || {
        let mut failures = Vec::new();
        let mut count = 0;
        for l in [2u32, 3, 4] {
            for k in 1..=BLOCK_MAX_K {
                for n in 1..=BLOCK_MAX_N {
                    let parts = Partition::all_with_max_rows(n, k);
                    for lambda in &parts {
                        for mu in &parts {
                            let c = block_criteria(lambda, mu, l, k)?;
                            if c[0] != c[1] || c[1] != c[2] || same_block(lambda, mu, l, k)? != c[1] {
                                failures.push(format!("{lambda} {mu} l={l} k={k}: {c:?}"));
                            }
                            count += 1;
                        }
                    }
                }
            }
        }
        Ok((count, first_failure(&failures)))
    })]
}

/// Decomposition matrices by `(l, n)`.
#[derive(Default)]
pub struct OracleCache {
    bases: BTreeMap<u32, CanonicalBasis>,
    matrices: BTreeMap<(u32, u32), DecompositionMatrix>,
}

impl OracleCache {
    pub fn matrix(&mut self, n: u32, l: u32) -> Result<&DecompositionMatrix> {
        if !self.matrices.contains_key(&(l, n)) {
            if !self.bases.contains_key(&l) {
                self.bases.insert(l, CanonicalBasis::new(l)?);
            }
            let m = decomposition_matrix_with(self.bases.get_mut(&l).unwrap(), n)?;
            self.matrices.insert((l, n), m);
        }
        Ok(&self.matrices[&(l, n)])
    }
}

/// Interior `mu` with at most `k` rows and `|mu| <= max_n`.
pub fn interior_weights(l: u32, k: usize, max_n: u32) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let parts = if n == 0 { vec![Partition::empty()] } else { Partition::all_with_max_rows(n, k) };
        for mu in parts {
            if LatticePoint::from_partition(&mu, k)?.is_interior(l)? {
                out.push(mu);
            }
        }
    }
    Ok(out)
}

fn bound_pairs(cache: &mut OracleCache, l: u32, k: usize, mut f: impl FnMut(&Partition, &Partition, i64, u64)) -> Result<u64> {
    let mut count = 0;
    for mu in interior_weights(l, k, BOUND_MAX_N)? {
        let n = mu.size();
        let summary = canonical_orbit(&mu, l, k)?;
        let dm = cache.matrix(n, l)?;
        let lambdas = if n == 0 { vec![Partition::empty()] } else { Partition::all_with_max_rows(n, k) };
        for lambda in lambdas {
            let d = if n == 0 { 1 } else { dm.at_one(&lambda, &mu) };
            let b = summary.reduced_counts.get(&lambda).copied().unwrap_or(0);
            f(&lambda, &mu, d, b);
            count += 1;
        }
    }
    Ok(count)
}

fn bound(cache: &mut OracleCache) -> Vec<Check> {
    let mut checks = Vec::new();
    for l in [2u32, 3] {
        let mut over = Vec::new();
        let mut strict = Vec::new();
        let res = bound_pairs(cache, l, 3, |lambda, mu, d, b| {
            if d < 0 || d as u64 > b {
                over.push(format!("d({lambda},{mu}) = {d} > n = {b}"));
            } else if (d as u64) < b {
                strict.push(format!("d({lambda},{mu}) = {d} < n = {b}"));
            }
        });
        checks.push(match res {
            Ok(count) => {
                let detail = first_failure(&over);
                Check { name: format!("k3-l{l}-upper-bound"), passed: detail.is_none(), count, detail: detail.unwrap_or_default() }
            }
            Err(e) => Check { name: format!("k3-l{l}-upper-bound"), passed: false, count: 0, detail: e.to_string() },
        });
        let detail = first_failure(&strict);
        let count = checks.last().unwrap().count;
        checks.push(Check { name: format!("k3-l{l}-sharp"), passed: detail.is_none() && count > 0, count, detail: detail.unwrap_or_default() });
    }
    for l in [2u32, 3] {
        let mut over = Vec::new();
        let mut strict = 0u64;
        let res = bound_pairs(cache, l, 4, |lambda, mu, d, b| {
            if d < 0 || d as u64 > b {
                over.push(format!("d({lambda},{mu}) = {d} > n = {b}"));
            } else if (d as u64) < b {
                strict += 1;
            }
        });
        checks.push(match res {
            Ok(count) => {
                let fail = first_failure(&over);
                Check {
                    name: format!("k4-l{l}-upper-bound"),
                    passed: fail.is_none(),
                    count,
                    detail: fail.unwrap_or_else(|| format!("{strict} strict")),
                }
            }
            Err(e) => Check { name: format!("k4-l{l}-upper-bound"), passed: false, count: 0, detail: e.to_string() },
        });
    }
    checks
}

fn simplicity(cache: &mut OracleCache) -> Vec<Check> {
    let mut column_all = (0u64, Vec::new());
    let mut column_critical = (0u64, Vec::new());
    let mut row_all = (0u64, Vec::new());
    let mut err: Option<Error> = None;
    'outer: for l in [2u32, 3] {
        for k in 1..=3usize {
            for n in 1..=SIMPLICITY_MAX_N {
                for lambda in Partition::all_with_max_rows(n, k) {
                    let cert = match simplicity_certificate(&lambda, l, k) {
                        Ok(c) => c,
                        Err(e) => {
                            err = Some(e);
                            break 'outer;
                        }
                    };
                    if !cert.is_positive() {
                        continue;
                    }
                    let dm = match cache.matrix(n, l) {
                        Ok(m) => m,
                        Err(e) => {
                            err = Some(e);
                            break 'outer;
                        }
                    };
                    let tag = format!("{lambda} l={l} k={k} {}", cert.name());
                    let column_ok = dm.col_index(&lambda).is_some()
                        && Partition::all_with_max_rows(n, k).iter().all(|nu| nu == &lambda || dm.at_one(nu, &lambda) == 0);
                    let row_ok = dm.cols.iter().all(|mu| mu == &lambda || dm.at_one(&lambda, mu) == 0);
                    column_all.0 += 1;
                    if !column_ok {
                        column_all.1.push(tag.clone());
                    }
                    if matches!(cert, SimplicityCertificate::SmallestCritical | SimplicityCertificate::Critical) {
                        column_critical.0 += 1;
                        if !column_ok {
                            column_critical.1.push(tag.clone());
                        }
                    }
                    row_all.0 += 1;
                    if !row_ok {
                        row_all.1.push(tag);
                    }
                }
            }
        }
    }
    if let Some(e) = err {
        return vec![Check { name: "certificates".into(), passed: false, count: 0, detail: e.to_string() }];
    }
    let mk = |name: &str, (count, fails): (u64, Vec<String>)| {
        let detail = first_failure(&fails);
        Check { name: name.into(), passed: detail.is_none(), count, detail: detail.unwrap_or_default() }
    };
    vec![
        mk("indicator-column", column_all),
        mk("indicator-column-critical", column_critical),
        mk("indicator-row", row_all),
    ]
}

fn oracle() -> Vec<Check> {
    let mut checks = Vec::new();
    let labeling = calibrate_labeling(4, &[2, 3, 4], GramForm::Contravariant);
    checks.push(run("labeling-calibration", || Ok((1, labeling.as_ref().err().map(|e| e.to_string())))));
    let Ok(labeling) = labeling else { return checks };
    for l in [2u32, 3] {
        checks.push(run(&format!("structure-and-gram-l{l}"), || {
            let mut count = 0;
            for n in 1..=ORACLE_MAX_N {
                count += oracle_selfcheck(n, l, labeling)?.nonzero as u64;
            }
            Ok((count, None))
        }));
    }
    checks.push(run("semisimple", || {
        let mut count = 0;
        for n in 1..=ORACLE_MAX_N {
            let m = decomposition_matrix(n, n + 1)?;
            for lambda in &m.rows {
                for mu in &m.cols {
                    let want = i64::from(lambda == mu);
                    if m.at_one(lambda, mu) != want {
                        return Ok((count, Some(format!("n = {n}: d({lambda},{mu}) != {want}"))));
                    }
                    count += 1;
                }
            }
        }
        Ok((count, None))
    }));
    checks
}

fn sst() -> Vec<Check> {
    [2u32, 3]
        .iter()
        .map(|&l| {
            run(&format!("k3-l{l}"), || {
                let mut failures = Vec::new();
                let mut count = 0;
                for mu in interior_weights(l, 3, BOUND_MAX_N)? {
                    let summary = canonical_orbit(&mu, l, 3)?;
                    let n = mu.size();
                    let lambdas = if n == 0 { vec![Partition::empty()] } else { Partition::all_with_max_rows(n, 3) };
                    for lambda in lambdas {
                        let paths = summary.reduced_counts.get(&lambda).copied().unwrap_or(0);
                        let sst = reduced_path_sst_count(&lambda, &mu, l, 3)?;
                        if paths != sst {
                            failures.push(format!("{lambda} {mu}: paths {paths}, sst {sst}"));
                        }
                        count += 1;
                    }
                }
                Ok((count, first_failure(&failures)))
            })
        })
        .collect()
}
