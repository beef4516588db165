//! Straight and special skew tableaux, big diamond elements `E`, their matrix
//! coefficients in the seminormal representation, and the embedding of the
//! `k`-row quotient of `H_m(x^l)` into that of `H_n(x)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::alcove::LatticePoint;
use crate::arith::{a_d, CyclotomicNumber, EchelonBasis, Field, Matrix, Rational, RationalFunction, Ring};
use crate::error::{domain, invariant, Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement, SeminormalBlock};
use crate::tableaux::{enumerate_standard_tableaux, l_equivalence_class, Partition, StandardTableau};

type Rf = RationalFunction;

/// Classification of a skew tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StraightnessFlags {
    pub is_l_straight: bool,
    pub is_k_special: bool,
    /// `d` with `d l = mu_a - mu_b + b - a`, for special tableaux of length `2l`
    pub d: Option<i64>,
}

fn check_l(l: u32) -> Result<()> {
    if l < 2 {
        return Err(domain(format!("l = {l}, need l >= 2")));
    }
    Ok(())
}

/// `(l-1) rho` with `k` entries, as a partition.
pub fn smallest_critical(l: u32, k: usize) -> Partition {
    Partition::from_unsorted(&(0..k).map(|a| (l - 1) * (k - 1 - a) as u32).collect::<Vec<_>>())
}

pub fn classify(t: &StandardTableau, l: u32, k: usize) -> Result<StraightnessFlags> {
    check_l(l)?;
    if t.outer().len() > k {
        return Err(Error::Shape(format!("{t} has more than {k} rows")));
    }
    let m = t.size();
    let is_l_straight = (1..m).all(|i| t.d(i).rem_euclid(l as i64) == l as i64 - 1);
    let critical = LatticePoint::from_partition(t.inner(), k)?.is_critical(l)?;
    let is_k_special = is_l_straight && critical && m % l as usize == 0;
    let d = if is_k_special && m == 2 * l as usize {
        let y = LatticePoint::from_partition(t.inner(), k)?;
        let (a, b) = (t.row_of(1), t.row_of(l as usize + 1));
        Some((y.0[a - 1] - y.0[b - 1]) / l as i64)
    } else {
        None
    };
    Ok(StraightnessFlags { is_l_straight, is_k_special, d })
}

/// `Psi(t)(m) = t_rho(m l) / l - rho` for a special tableau starting at `(l-1) rho`.
pub fn psi(t: &StandardTableau, l: u32, k: usize) -> Result<StandardTableau> {
    let flags = classify(t, l, k)?;
    if !flags.is_k_special || *t.inner() != smallest_critical(l, k) {
        return Err(domain(format!("{t} is not special from (l-1)rho")));
    }
    let lu = l as usize;
    let mut shape = t.inner().clone();
    let mut rows = Vec::new();
    let mut prev = vec![0i64; k];
    for step in 1..=t.size() {
        shape = shape.add_cell(t.row_of(step));
        if step % lu == 0 {
            let y = LatticePoint::from_partition(&shape, k)?;
            let z: Vec<i64> = y.0.iter().enumerate().map(|(a, &v)| v / l as i64 - (k - 1 - a) as i64).collect();
            let row = (0..k).find(|&a| z[a] != prev[a]).ok_or_else(|| invariant("segment adds no cell"))?;
            rows.push(row + 1);
            prev = z;
        }
    }
    StandardTableau::from_row_word(&Partition::empty(), &rows)
}

/// `T^l_lambda`: special tableaux from `(l-1) rho` to `lambda`.
pub fn special_tableaux(lambda: &Partition, l: u32, k: usize) -> Result<Vec<StandardTableau>> {
    let base = smallest_critical(l, k);
    if !lambda.contains(&base) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for t in enumerate_standard_tableaux(lambda, &base)? {
        if classify(&t, l, k)?.is_k_special {
            out.push(t);
        }
    }
    Ok(out)
}

/// `J_i = {l-i+1, l-i+3, ..., l+i-1}` shifted by `offset`.
pub fn j_set(i: usize, l: u32, offset: usize) -> Vec<usize> {
    let l = l as usize;
    (0..i).map(|s| offset + l + 1 - i + 2 * s).collect()
}

/// `(e_{n+l} ... e_{n+2l-1}) (e_{n+l-1} ... e_{n+2l-2}) ... (e_{n+1} ... e_{n+l})`.
pub fn row_form_word(offset: usize, l: u32) -> Vec<usize> {
    let l = l as usize;
    let mut w = Vec::with_capacity(l * l);
    for r in 0..l {
        w.extend(offset + l - r..=offset + 2 * l - 1 - r);
    }
    w
}

/// `e_{J_1} e_{J_2} ... e_{J_l} ... e_{J_2} e_{J_1}`.
pub fn palindromic_word(offset: usize, l: u32) -> Vec<usize> {
    let lu = l as usize;
    let mut w = Vec::new();
    for i in (1..=lu).chain((1..lu).rev()) {
        w.extend(j_set(i, l, offset));
    }
    w
}

/// `s_E` on `1..=2l`: `i -> i + l` for `i <= l`, `i -> i - l` otherwise.
pub fn s_e_permutation(l: u32) -> Vec<usize> {
    let l = l as usize;
    (1..=2 * l).map(|i| if i <= l { i + l } else { i - l }).collect()
}

/// `s_{J,l-1}^{-1} s_{J_l} s_{J,l-1}` composed from simple transpositions, as one-line notation.
pub fn s_e_from_layers(l: u32) -> Vec<usize> {
    let lu = l as usize;
    // s_{J,l-1} = s_{J_{l-1}} ... s_{J_1}; as a word, rightmost acts first
    let mut word = Vec::new();
    for i in 1..lu {
        word.extend(j_set(i, l, 0));
    }
    let mut full: Vec<usize> = word.clone();
    full.extend(j_set(lu, l, 0));
    full.extend(word.iter().rev());
    // w = s_{a_1} s_{a_2} ... ; w(j) computed by applying from the right
    let mut perm: Vec<usize> = (1..=2 * lu).collect();
    for &a in full.iter() {
        // perm <- perm o s_a
        perm.swap(a - 1, a);
    }
    perm
}

/// A big diamond element and its placement.
#[derive(Clone, Debug, PartialEq)]
pub struct DiamondElement<F: Ring> {
    pub offset: usize,
    pub l: u32,
    pub element: HeckeElement<F>,
}

/// `E(offset)` in `alg`, from the row form; errors unless both product forms agree.
pub fn diamond_element<F: Ring>(alg: &HeckeAlgebra<F>, offset: usize, l: u32) -> Result<DiamondElement<F>> {
    check_l(l)?;
    if offset + 2 * l as usize > alg.n() {
        return Err(Error::Index { index: (offset + 2 * l as usize) as i64, range: format!("..={}", alg.n()) });
    }
    let row = alg.e_word(&row_form_word(offset, l))?;
    let pal = alg.e_word(&palindromic_word(offset, l))?;
    if row != pal {
        return Err(invariant(format!("product forms of E({offset}) differ for l = {l}")));
    }
    Ok(DiamondElement { offset, l, element: row })
}

/// `e_{w_1} ... e_{w_r} v` on a block (rightmost factor first).
pub fn apply_e_word(block: &SeminormalBlock, word: &[usize], v: &[Rf]) -> Vec<Rf> {
    let mut cur = v.to_vec();
    for &i in word.iter().rev() {
        cur = block.apply_e(i, &cur);
    }
    cur
}

fn unit(dim: usize, s: usize) -> Vec<Rf> {
    let mut v = vec![Rf::zero(); dim];
    v[s] = Rf::one();
    v
}

/// Applies a permutation of entries `1..=m` (one-line, `p[i-1]` is the image of `i`) to `t`.
pub fn permute_entries(t: &StandardTableau, p: &[usize]) -> Option<StandardTableau> {
    let word = t.row_word();
    let mut new = vec![0usize; word.len()];
    for (i, &r) in word.iter().enumerate() {
        let target = if i < p.len() { p[i] } else { i + 1 };
        new[target - 1] = r;
    }
    let s = StandardTableau::from_row_word(t.inner(), &new).ok()?;
    (s.outer() == t.outer()).then_some(s)
}

fn binom2(l: u32) -> i64 {
    (l as i64) * (l as i64 - 1) / 2
}

/// `a_d(x^l)`.
pub fn a_d_power(d: i64, l: u32) -> Result<Rf> {
    Ok(a_d(d)?.compose_power(l))
}

/// Closed forms for `<E t', t>` on special tableaux of length `2l`.
#[derive(Clone, Debug, PartialEq)]
pub enum DiamondCoefficient {
    /// `x^{C(l,2)} a_d(x^l)`
    Diagonal(Rf),
    /// product of the two opposite entries, `x^{2C(l,2)} a_d(x^l) a_{-d}(x^l)`
    OffDiagonalSquared(Rf),
    Zero,
}

pub fn diamond_coefficient_generic(t: &StandardTableau, t2: &StandardTableau, l: u32, k: usize) -> Result<DiamondCoefficient> {
    if t.inner() != t2.inner() || t.outer() != t2.outer() {
        return Err(Error::Shape(format!("{t} and {t2} have different shapes")));
    }
    let flags = classify(t, l, k)?;
    let d = flags.d.ok_or_else(|| domain(format!("{t} is not special of length 2l")))?;
    let c = Rf::x_pow(binom2(l));
    if t == t2 {
        return Ok(DiamondCoefficient::Diagonal(&c * &a_d_power(d, l)?));
    }
    if permute_entries(t, &s_e_permutation(l)).as_ref() == Some(t2) {
        let v = &(&c * &c) * &(&a_d_power(d, l)? * &a_d_power(-d, l)?);
        return Ok(DiamondCoefficient::OffDiagonalSquared(v));
    }
    Ok(DiamondCoefficient::Zero)
}

/// `<E t, t2>` in the square-root-free seminormal form: the `t2` entry of `E t`.
pub fn diamond_matrix_entry(block: &SeminormalBlock, t: &StandardTableau, t2: &StandardTableau, l: u32) -> Result<Rf> {
    let (s, r) = match (block.index_of(t), block.index_of(t2)) {
        (Some(s), Some(r)) => (s, r),
        _ => return Err(Error::Shape("tableau not in block".into())),
    };
    Ok(apply_e_word(block, &palindromic_word(0, l), &unit(block.dim(), s))[r].clone())
}

/// Checks the closed forms against direct products on one block; returns the number of entries compared.
pub fn check_diamond_block(block: &SeminormalBlock, l: u32, k: usize) -> Result<usize> {
    let special: Vec<usize> = (0..block.dim())
        .filter(|&s| classify(&block.tableaux()[s], l, k).map(|f| f.d.is_some()).unwrap_or(false))
        .collect();
    let word = palindromic_word(0, l);
    let columns: BTreeMap<usize, Vec<Rf>> =
        special.iter().map(|&s| (s, apply_e_word(block, &word, &unit(block.dim(), s)))).collect();
    let mut checked = 0;
    for &s in &special {
        let t = &block.tableaux()[s];
        for &r in &special {
            let t2 = &block.tableaux()[r];
            let direct = &columns[&s][r];
            match diamond_coefficient_generic(t, t2, l, k)? {
                DiamondCoefficient::Diagonal(v) => {
                    if *direct != v {
                        return Err(invariant(format!("<E t, t> for {t}: {direct} vs {v}")));
                    }
                }
                DiamondCoefficient::OffDiagonalSquared(v) => {
                    let prod = direct * &columns[&r][s];
                    if prod != v {
                        return Err(invariant(format!("<E t, s_E t><E s_E t, t> for {t}: {prod} vs {v}")));
                    }
                }
                DiamondCoefficient::Zero => {
                    if !direct.is_zero() {
                        return Err(invariant(format!("<E {t}, {t2}> = {direct}, expected 0")));
                    }
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Skew blocks `lambda / mu` with `mu` critical, at most `k` rows, reached by
/// `l` cells in row `a` then `l` cells in row `b != a`, for `1 <= |d| <= max_d`.
pub fn special_blocks(l: u32, k: usize, max_d: i64) -> Result<Vec<(SeminormalBlock, i64)>> {
    check_l(l)?;
    let li = l as i64;
    let mut out = Vec::new();
    let mut seen = BTreeMap::new();
    // reduced critical points l * (g_1 > g_2 > ... > g_k = 0)
    let mut pts = Vec::new();
    let bound = max_d + k as i64;
    fn rec(k: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let remaining = (k - cur.len() - 1) as i64;
        let top = cur.last().map_or(bound, |&g| g - 1);
        for g in (remaining..=top).rev() {
            if cur.len() + 1 == k && g != 0 {
                continue;
            }
            cur.push(g);
            rec(k, bound, cur, out);
            cur.pop();
        }
    }
    rec(k, bound, &mut Vec::new(), &mut pts);
    for g in pts {
        let y = LatticePoint(g.iter().map(|&v| v * li).collect());
        let mu = y.sub(&LatticePoint::rho(k)).0;
        if mu.iter().any(|&v| v < 0) {
            continue;
        }
        let mu = Partition::from_unsorted(&mu.iter().map(|&v| v as u32).collect::<Vec<_>>());
        for a in 1..=k {
            for b in 1..=k {
                if a == b {
                    continue;
                }
                let d = g[a - 1] - g[b - 1];
                if d.abs() > max_d {
                    continue;
                }
                let word: Vec<usize> = core::iter::repeat(a).take(l as usize).chain(core::iter::repeat(b).take(l as usize)).collect();
                let Ok(t) = StandardTableau::from_row_word(&mu, &word) else { continue };
                let key = (mu.clone(), t.outer().clone());
                if seen.insert(key, ()).is_none() {
                    out.push((SeminormalBlock::new(t.outer(), &mu)?, d));
                }
            }
        }
    }
    Ok(out)
}

/// `a_{+-r} = a_r a_{-r}`.
pub fn a_pm(r: i64) -> Result<Rf> {
    Ok(&a_d(r)? * &a_d(-r)?)
}

fn apply_set(t: &StandardTableau, set: &[usize]) -> Option<StandardTableau> {
    let mut cur = t.clone();
    for &j in set {
        cur = cur.swap(j)?;
    }
    Some(cur)
}

fn e_set_word(sets: &[Vec<usize>]) -> Vec<usize> {
    sets.iter().flatten().copied().collect()
}

/// Intermediate identities on one special tableau of length `2l`: the layer
/// relations in squared form, the closed form of the accumulated coefficient
/// (for `d > 0`), and the adjoint rewriting of `<E t_1, t_2>`.
pub fn check_layer_identities(block: &SeminormalBlock, t: &StandardTableau, l: u32, k: usize) -> Result<()> {
    let d = classify(t, l, k)?.d.ok_or_else(|| domain("not special of length 2l"))?;
    let li = l as i64;
    let lu = l as usize;
    let dim = block.dim();
    let idx = |s: &StandardTableau| block.index_of(s).ok_or_else(|| invariant(format!("{s} not in block")));
    let mut u = t.clone();
    let mut p_fwd = Rf::one();
    let mut p_back = Rf::one();
    for i in 1..lu {
        let ji = j_set(i, l, 0);
        let ji1 = j_set(i + 1, l, 0);
        let v = apply_set(&u, &ji).ok_or_else(|| invariant(format!("s_J{i} of {u} is not standard")))?;
        let (ui, vi) = (idx(&u)?, idx(&v)?);
        let eu = apply_e_word(block, &ji, &unit(dim, ui));
        let ev = apply_e_word(block, &ji, &unit(dim, vi));
        let c = eu[vi].clone();
        let c_back = ev[ui].clone();
        let x = apply_e_word(block, &ji1, &eu);
        let y = apply_e_word(block, &ji1, &unit(dim, vi));
        if x.iter().zip(&y).any(|(a, b)| *a != &c * b) {
            return Err(invariant(format!("layer {i}: e_J{} e_J{i} u is not a multiple of e_J{} s u for {t}", i + 1, i + 1)));
        }
        let expected = a_pm(d * li + li - i as i64)?.pow(i as i64);
        if &c * &c_back != expected {
            return Err(invariant(format!("layer {i}: squared coefficient {} vs {expected} for {t}", &c * &c_back)));
        }
        p_fwd = &p_fwd * &c;
        p_back = &p_back * &c_back;
        u = v;
    }
    // e_{J_l} e_{J,l-1} t = P e_{J_l} s_{J,l-1} t
    let layers: Vec<Vec<usize>> = (1..lu).rev().map(|i| j_set(i, l, 0)).collect();
    let jl = j_set(lu, l, 0);
    let lhs = apply_e_word(block, &jl, &apply_e_word(block, &e_set_word(&layers), &unit(dim, idx(t)?)));
    let rhs = apply_e_word(block, &jl, &unit(dim, idx(&u)?));
    if lhs.iter().zip(&rhs).any(|(a, b)| *a != &p_fwd * b) {
        return Err(invariant(format!("accumulated layer coefficient fails for {t}")));
    }
    if d > 0 {
        let one = Rf::one();
        let closed = &(&Rf::x_pow(binom2(l)) * &a_d(d * li)?.pow(1 - li))
            * &(&(&one - &Rf::x_pow((d + 1) * li)) / &(&one - &Rf::x_pow(d * li + 1)));
        if &p_fwd * &p_back != closed {
            return Err(invariant(format!("squared accumulated coefficient {} vs {closed} for {t}", &p_fwd * &p_back)));
        }
    }
    Ok(())
}

/// `<E t_1, t_2> = <e_{J_l} e_J t_1, e_J t_2>` in the invariant form, for all special pairs of a block.
pub fn check_adjoint_rewriting(block: &SeminormalBlock, l: u32, k: usize) -> Result<usize> {
    let w = block.form_weights()?;
    let dim = block.dim();
    let lu = l as usize;
    let layers: Vec<Vec<usize>> = (1..lu).rev().map(|i| j_set(i, l, 0)).collect();
    let ej = e_set_word(&layers);
    let jl = j_set(lu, l, 0);
    let special: Vec<usize> =
        (0..dim).filter(|&s| classify(&block.tableaux()[s], l, k).map(|f| f.is_k_special).unwrap_or(false)).collect();
    let form = |a: &[Rf], b: &[Rf]| -> Rf {
        let mut acc = Rf::zero();
        for s in 0..dim {
            if !a[s].is_zero() && !b[s].is_zero() {
                acc = &acc + &(&w[s] * &(&a[s] * &b[s]));
            }
        }
        acc
    };
    let word = palindromic_word(0, l);
    let mut n = 0;
    for &s1 in &special {
        let et = apply_e_word(block, &word, &unit(dim, s1));
        let left = apply_e_word(block, &jl, &apply_e_word(block, &ej, &unit(dim, s1)));
        for &s2 in &special {
            let lhs = form(&et, &unit(dim, s2));
            let rhs = form(&left, &apply_e_word(block, &ej, &unit(dim, s2)));
            if lhs != rhs {
                return Err(invariant(format!("adjoint rewriting fails for {} -> {}", block.tableaux()[s1], block.tableaux()[s2])));
            }
            n += 1;
        }
    }
    Ok(n)
}

/// Both sides of `(a_{+-r})^{s+1} (a_{+-(r+1)})^s ... a_{+-(r+s)} = x^{C(s+2,2)} a_{r-1}^{-(s+1)} (1-x^{r+s+1})/(1-x^r)`.
pub fn layer_product_identity(r: i64, s: i64) -> Result<(Rf, Rf)> {
    if r < 1 || s < 1 {
        return Err(domain("need r, s >= 1"));
    }
    let mut lhs = Rf::one();
    for j in 0..=s {
        lhs = &lhs * &a_pm(r + j)?.pow(s + 1 - j);
    }
    // a_{r-1}^{-1} = (1 - x^{r-1}) / (1 - x^r), which is 0 at r = 1
    let one = Rf::one();
    let a_prev_inv = &(&one - &Rf::x_pow(r - 1)) / &(&one - &Rf::x_pow(r));
    let rhs = &(&Rf::x_pow((s + 2) * (s + 1) / 2) * &(&(&one - &Rf::x_pow(r + s + 1)) / &(&one - &Rf::x_pow(r))))
        * &a_prev_inv.pow(s + 1);
    Ok((lhs, rhs))
}

/// `(d(t;l,l+1)+1) prod_{i<l} (d(t;i+1,l+i)-1) / prod_{i<=l} d(t;i,l+i)`; `None` if a denominator vanishes.
pub fn straight_ratio(t: &StandardTableau, l: u32) -> Result<Option<Rational>> {
    let lu = l as usize;
    if t.size() != 2 * lu {
        return Err(Error::Shape(format!("{t} does not have length 2l")));
    }
    let dd = |i: usize, j: usize| t.axial_distance(i, j);
    let mut num = dd(lu, lu + 1)? + 1;
    for i in 1..lu {
        num *= dd(i + 1, lu + i)? - 1;
    }
    let mut den = 1i64;
    for i in 1..=lu {
        den *= dd(i, lu + i)?;
    }
    if den == 0 {
        return Ok(None);
    }
    Ok(Some(Rational::new(num.into(), den.into())))
}

/// Whether `t2 = prod_{a in A} (a, a+l) t` for some `A`.
pub fn transposition_related(t: &StandardTableau, t2: &StandardTableau, l: u32) -> bool {
    let lu = l as usize;
    if t.inner() != t2.inner() || t.outer() != t2.outer() || t.size() != 2 * lu {
        return false;
    }
    (1..=lu).all(|a| {
        let (p, q) = (t.position(a), t.position(a + lu));
        let (p2, q2) = (t2.position(a), t2.position(a + lu));
        (p2, q2) == (p, q) || (p2, q2) == (q, p)
    })
}

/// Outcome of comparing `<E t, t'>` at `zeta_l` with the axial-distance formula.
#[derive(Clone, Debug, PartialEq)]
pub struct StraightReport {
    pub l: u32,
    /// `C(q)` calibrated from a special diagonal entry
    pub constant: CyclotomicNumber,
    pub diagonal_checked: usize,
    pub diagonal_mismatches: usize,
    pub zero_pattern_checked: usize,
    pub zero_pattern_mismatches: usize,
    pub squared_checked: usize,
    pub squared_mismatches: usize,
    /// entries with a pole at `zeta_l` or a vanishing axial distance
    pub skipped: usize,
}

impl StraightReport {
    pub fn consistent(&self) -> bool {
        self.diagonal_mismatches == 0 && self.zero_pattern_mismatches == 0 && self.squared_mismatches == 0
    }
}

/// The normalized diagonal ratio `Q^t(zeta) / C(zeta)` for a straight tableau of length `2l`.
pub fn diamond_coefficient_at_root(block: &SeminormalBlock, t: &StandardTableau, l: u32, constant: &CyclotomicNumber) -> Result<Option<CyclotomicNumber>> {
    let q = diamond_matrix_entry(block, t, t, l)?;
    if !q.is_evaluable_at(l) {
        return Ok(None);
    }
    let inv = constant.inv().ok_or_else(|| domain("C = 0"))?;
    Ok(Some(q.evaluate_at_root(l)?.mul(&inv)))
}

/// Straight tableaux of length `2l` on skew shapes with inner part of size at most `max_inner`
/// and at most `k` rows; `C` is calibrated from a special diagonal entry.
pub fn check_straight_coefficients(l: u32, k: usize, max_inner: u32) -> Result<StraightReport> {
    check_l(l)?;
    let lu = l as usize;
    // C from the smallest special tableau: ratio (d+1)/d at d = 1 equals 2
    let special_block = special_blocks(l, k.max(2), 1)?;
    let (blk, _) = special_block.first().ok_or_else(|| invariant("no special block"))?;
    let t0 = blk
        .tableaux()
        .iter()
        .find(|t| classify(t, l, k.max(2)).map(|f| f.d == Some(1)).unwrap_or(false))
        .ok_or_else(|| invariant("no special tableau with d = 1"))?;
    let q0 = diamond_matrix_entry(blk, t0, t0, l)?.evaluate_at_root(l)?;
    let r0 = straight_ratio(t0, l)?.ok_or_else(|| invariant("degenerate calibration tableau"))?;
    let constant = q0.mul(&CyclotomicNumber::from_rational(l, r0).inv().ok_or_else(|| invariant("zero ratio"))?);
    let mut rep = StraightReport {
        l,
        constant: constant.clone(),
        diagonal_checked: 0,
        diagonal_mismatches: 0,
        zero_pattern_checked: 0,
        zero_pattern_mismatches: 0,
        squared_checked: 0,
        squared_mismatches: 0,
        skipped: 0,
    };
    let word = palindromic_word(0, l);
    for size in 0..=max_inner {
        for inner in Partition::all_with_max_rows(size, k).into_iter().chain((size == 0).then(Partition::empty)) {
            for outer in Partition::all_with_max_rows(size + 2 * l, k) {
                if !outer.contains(&inner) {
                    continue;
                }
                let block = SeminormalBlock::new(&outer, &inner)?;
                let straight: Vec<usize> = (0..block.dim())
                    .filter(|&s| (1..2 * lu).all(|i| block.tableaux()[s].d(i).rem_euclid(l as i64) == l as i64 - 1))
                    .collect();
                if straight.is_empty() {
                    continue;
                }
                let cols: BTreeMap<usize, Vec<Rf>> =
                    straight.iter().map(|&s| (s, apply_e_word(&block, &word, &unit(block.dim(), s)))).collect();
                let at_root = |v: &Rf| -> Option<CyclotomicNumber> { v.is_evaluable_at(l).then(|| v.evaluate_at_root(l).ok()).flatten() };
                for &s in &straight {
                    let t = &block.tableaux()[s];
                    match (at_root(&cols[&s][s]), straight_ratio(t, l)?) {
                        (Some(q), Some(r)) => {
                            rep.diagonal_checked += 1;
                            if q != constant.mul(&CyclotomicNumber::from_rational(l, r)) {
                                rep.diagonal_mismatches += 1;
                            }
                        }
                        _ => rep.skipped += 1,
                    }
                    for &r in &straight {
                        if r == s {
                            continue;
                        }
                        let t2 = &block.tableaux()[r];
                        let related = transposition_related(t, t2, l);
                        let (Some(a), Some(b)) = (at_root(&cols[&s][r]), at_root(&cols[&r][s])) else {
                            rep.skipped += 1;
                            continue;
                        };
                        if !related {
                            rep.zero_pattern_checked += 1;
                            if !a.is_zero() {
                                rep.zero_pattern_mismatches += 1;
                            }
                            continue;
                        }
                        let (Some(qs), Some(qr)) = (at_root(&cols[&s][s]), at_root(&cols[&r][r])) else {
                            rep.skipped += 1;
                            continue;
                        };
                        rep.squared_checked += 1;
                        if a.mul(&b) != qs.mul(&qr) {
                            rep.squared_mismatches += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// Report of the embedding check for `(m, k, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub m: usize,
    pub k: usize,
    pub l: u32,
    pub n: usize,
    /// `|R|` and the size of the range of the orbit projector
    pub r_dim: usize,
    pub range_dim: usize,
    /// range matches `R (x) V(m,k)` under `s -> (s restricted to (l-1) rho, Psi)`
    pub factorization_ok: bool,
    /// diagonal entries equal, zero patterns equal, opposite products equal
    pub squared_identity_ok: bool,
    /// a single diagonal change of basis conjugates every generator to `1 (x) e_i(x^l)`
    pub identity_ok: bool,
    pub dim_generic: usize,
    pub dim_expected: usize,
    pub dim_at_root: usize,
    /// whether the generators had no pole at `zeta_l` in the tableau basis
    pub evaluable_in_tableau_basis: bool,
}

/// Dimension of the algebra generated (under products and spans) by `gens`.
pub fn generated_dimension<F: Field>(gens: &[Matrix<F>]) -> usize {
    let mut basis = EchelonBasis::new();
    let flat = |m: &Matrix<F>| -> Vec<F> { m.to_rows().into_iter().flatten().collect() };
    let mut found: Vec<Matrix<F>> = Vec::new();
    for g in gens {
        if basis.insert(flat(g)) {
            found.push(g.clone());
        }
    }
    let mut i = 0;
    while i < found.len() {
        let cur = found[i].clone();
        for g in gens {
            let p = cur.mul(g);
            if basis.insert(flat(&p)) {
                found.push(p);
            }
        }
        i += 1;
    }
    basis.dim()
}

pub fn verify_embedding(m: usize, k: usize, l: u32) -> Result<EmbeddingReport> {
    check_l(l)?;
    if m < 2 || k < 2 {
        return Err(domain("need m >= 2 and k >= 2"));
    }
    let lu = l as usize;
    let n0 = (lu - 1) * k * (k - 1) / 2;
    let n = n0 + m * lu;
    if n > 8 {
        return Err(Error::SizeGuard(format!("n = {n} > 8")));
    }
    let base = smallest_critical(l, k);
    // reference: row reading of (l-1) rho, then m segments in row 1
    let mut word: Vec<usize> = Vec::new();
    for (r, &p) in base.parts().iter().enumerate() {
        word.extend(core::iter::repeat(r + 1).take(p as usize));
    }
    word.extend(core::iter::repeat(1).take(m * lu));
    let t = StandardTableau::from_row_word(&Partition::empty(), &word)?;
    let class = l_equivalence_class(&t, l, k)?;
    let r_set = l_equivalence_class(&t.prefix(n0), l, k)?;
    let targets: Vec<StandardTableau> =
        Partition::all_with_max_rows(m as u32, k).iter().flat_map(|p| enumerate_standard_tableaux(p, &Partition::empty()).unwrap()).collect();

    // Theta
    let mut theta: Vec<(usize, usize)> = Vec::new();
    let mut factorization_ok = true;
    for s in &class {
        let prefix = s.prefix(n0);
        let seg = s.segment(n0, n);
        let ok = *prefix.outer() == base && classify(&seg, l, k)?.is_k_special;
        if !ok {
            factorization_ok = false;
            theta.push((usize::MAX, usize::MAX));
            continue;
        }
        let ri = r_set.iter().position(|r| *r == prefix);
        let pi = psi(&seg, l, k).ok().and_then(|p| targets.iter().position(|x| *x == p));
        match (ri, pi) {
            (Some(a), Some(b)) => theta.push((a, b)),
            _ => {
                factorization_ok = false;
                theta.push((usize::MAX, usize::MAX));
            }
        }
    }
    let mut images: Vec<(usize, usize)> = theta.clone();
    images.sort_unstable();
    images.dedup();
    factorization_ok &= images.len() == class.len() && class.len() == r_set.len() * targets.len();
    if !factorization_ok {
        return Ok(EmbeddingReport {
            m,
            k,
            l,
            n,
            r_dim: r_set.len(),
            range_dim: class.len(),
            factorization_ok,
            squared_identity_ok: false,
            identity_ok: false,
            dim_generic: 0,
            dim_expected: 0,
            dim_at_root: 0,
            evaluable_in_tableau_basis: false,
        });
    }

    // generators restricted to the range, in the order of `class`
    let mut blocks: BTreeMap<Partition, SeminormalBlock> = BTreeMap::new();
    for s in &class {
        if !blocks.contains_key(s.outer()) {
            blocks.insert(s.outer().clone(), SeminormalBlock::straight(s.outer())?);
        }
    }
    let size = class.len();
    let mut gens: Vec<Matrix<Rf>> = Vec::new();
    for i in 1..m {
        let word = palindromic_word(n0 + (i - 1) * lu, l);
        let mut mat = Matrix::zeros(size, size, &Rf::zero());
        for (c, s) in class.iter().enumerate() {
            let block = &blocks[s.outer()];
            let col = apply_e_word(block, &word, &unit(block.dim(), block.index_of(s).unwrap()));
            for (r, s2) in class.iter().enumerate() {
                if s2.outer() == s.outer() {
                    mat.set(r, c, col[block.index_of(s2).unwrap()].clone());
                }
            }
        }
        gens.push(mat.scale(&Rf::x_pow(-binom2(l))));
    }

    // 1 (x) e_i(x^l) on R (x) V(m,k)
    let mut small_blocks: BTreeMap<Partition, SeminormalBlock> = BTreeMap::new();
    for p in Partition::all_with_max_rows(m as u32, k) {
        small_blocks.insert(p.clone(), SeminormalBlock::straight(&p)?);
    }
    let mut targets_mats: Vec<Matrix<Rf>> = Vec::new();
    for i in 1..m {
        let mut mat = Matrix::zeros(size, size, &Rf::zero());
        for c in 0..size {
            for r in 0..size {
                let ((ra, sa), (rb, sb)) = (theta[r], theta[c]);
                if ra != rb || targets[sa].outer() != targets[sb].outer() {
                    continue;
                }
                let blk = &small_blocks[targets[sb].outer()];
                let col = blk.apply_e(i, &unit(blk.dim(), blk.index_of(&targets[sb]).unwrap()));
                mat.set(r, c, col[blk.index_of(&targets[sa]).unwrap()].compose_power(l));
            }
        }
        targets_mats.push(mat);
    }

    let mut squared_identity_ok = true;
    for (g, h) in gens.iter().zip(&targets_mats) {
        for a in 0..size {
            if g.get(a, a) != h.get(a, a) {
                squared_identity_ok = false;
            }
            for b in 0..size {
                if a != b {
                    if g.get(a, b).is_zero() != h.get(a, b).is_zero() {
                        squared_identity_ok = false;
                    }
                    if &(g.get(a, b) * g.get(b, a)) != &(h.get(a, b) * h.get(b, a)) {
                        squared_identity_ok = false;
                    }
                }
            }
        }
    }
    let identity_ok = squared_identity_ok && diagonal_conjugacy(&gens, &targets_mats).is_some();

    let ident = Matrix::identity(size, &Rf::zero());
    let mut all = vec![ident.clone()];
    all.extend(gens.iter().cloned());
    let dim_generic = generated_dimension(&all);
    let dim_expected: usize =
        Partition::all_with_max_rows(m as u32, k).iter().map(|p| (p.hook_length_count() as usize).pow(2)).sum();

    // evaluation at zeta_l: tableau basis if possible, otherwise the conjugated basis
    let evaluable_in_tableau_basis = gens.iter().all(|g| g.to_rows().iter().flatten().all(|v| v.is_evaluable_at(l)));
    let source: Vec<Matrix<Rf>> = if evaluable_in_tableau_basis {
        all.clone()
    } else {
        let mut v = vec![ident];
        v.extend(targets_mats.iter().cloned());
        v
    };
    let at_root: Vec<Matrix<CyclotomicNumber>> =
        source.iter().map(|g| g.try_map(|v| v.evaluate_at_root(l))).collect::<Result<_>>()?;
    let dim_at_root = generated_dimension(&at_root);

    Ok(EmbeddingReport {
        m,
        k,
        l,
        n,
        r_dim: r_set.len(),
        range_dim: size,
        factorization_ok,
        squared_identity_ok,
        identity_ok,
        dim_generic,
        dim_expected,
        dim_at_root,
        evaluable_in_tableau_basis,
    })
}

/// A diagonal `D` with `D g D^{-1} = h` for every pair, if one exists.
pub fn diagonal_conjugacy(gs: &[Matrix<Rf>], hs: &[Matrix<Rf>]) -> Option<Vec<Rf>> {
    let size = gs.first()?.rows();
    let mut dvec: Vec<Option<Rf>> = vec![None; size];
    for start in 0..size {
        if dvec[start].is_some() {
            continue;
        }
        dvec[start] = Some(Rf::one());
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for (g, h) in gs.iter().zip(hs) {
                for b in 0..size {
                    // (D g D^{-1})[b][a] = D_b g[b][a] / D_a
                    let gb = g.get(b, a);
                    if gb.is_zero() {
                        continue;
                    }
                    let val = &(h.get(b, a) * dvec[a].as_ref().unwrap()) / gb;
                    match &dvec[b] {
                        Some(v) if *v != val => return None,
                        Some(_) => {}
                        None => {
                            dvec[b] = Some(val);
                            stack.push(b);
                        }
                    }
                }
            }
        }
    }
    let d: Vec<Rf> = dvec.into_iter().map(Option::unwrap).collect();
    for (g, h) in gs.iter().zip(hs) {
        for a in 0..size {
            for b in 0..size {
                let lhs = &(&d[b] * g.get(b, a)) / &d[a];
                if lhs != *h.get(b, a) {
                    return None;
                }
            }
        }
    }
    Some(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Poly;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn words() {
        assert_eq!(row_form_word(0, 2), vec![2, 3, 1, 2]);
        assert_eq!(palindromic_word(0, 2), vec![2, 1, 3, 2]);
        assert_eq!(j_set(2, 3, 0), vec![2, 4]);
        assert_eq!(j_set(3, 3, 1), vec![2, 4, 6]);
        for l in 2..=4 {
            assert_eq!(s_e_from_layers(l), s_e_permutation(l));
        }
    }

    #[test]
    fn product_forms_agree() {
        for (l, n) in [(2u32, 4usize), (2, 5), (3, 6)] {
            let alg = HeckeAlgebra::with_parameter(n, Poly::monomial(1)).unwrap();
            for offset in 0..=n - 2 * l as usize {
                diamond_element(&alg, offset, l).unwrap();
            }
        }
        let alg = HeckeAlgebra::with_parameter(4, Poly::monomial(1)).unwrap();
        assert!(diamond_element(&alg, 1, 2).is_err());
        assert!(diamond_element(&alg, 0, 1).is_err());
    }

    #[test]
    fn classification() {
        let row = StandardTableau::from_row_word(&p(&[1]), &[1, 1, 1, 1]).unwrap();
        for l in 2..5 {
            assert!(classify(&row, l, 2).unwrap().is_l_straight);
        }
        let vertical = StandardTableau::from_row_word(&Partition::empty(), &[1, 2]).unwrap();
        assert!(!classify(&vertical, 3, 2).unwrap().is_l_straight);
        let t = StandardTableau::from_row_word(&p(&[1]), &[1, 1, 2, 2]).unwrap();
        let f = classify(&t, 2, 2).unwrap();
        assert!(f.is_k_special);
        assert_eq!(f.d, Some(1));
    }

    #[test]
    fn psi_small() {
        let ts = special_tableaux(&p(&[3, 2]), 2, 2).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(psi(&ts[0], 2, 2).unwrap().outer(), &p(&[1, 1]));
        let empty = StandardTableau::from_row_word(&p(&[1]), &[]).unwrap();
        assert_eq!(psi(&empty, 2, 2).unwrap().size(), 0);
    }

    #[test]
    fn psi_is_bijective() {
        for k in [2usize, 3] {
            for l in [2u32, 3] {
                let base = smallest_critical(l, k);
                let n0 = base.size();
                for extra in (0..=3 * l).step_by(l as usize) {
                    for lambda in Partition::all_with_max_rows(n0 + extra, k) {
                        let y = LatticePoint::from_partition(&lambda, k).unwrap();
                        if y.0.iter().any(|v| v % l as i64 != 0) || !lambda.contains(&base) {
                            continue;
                        }
                        let ts = special_tableaux(&lambda, l, k).unwrap();
                        let shape = LatticePoint(y.0.iter().map(|v| v / l as i64).collect()).to_partition().unwrap();
                        let mut images: Vec<_> = ts.iter().map(|t| psi(t, l, k).unwrap()).collect();
                        assert!(images.iter().all(|s| *s.outer() == shape));
                        images.sort_by_key(|s| s.row_word());
                        images.dedup();
                        assert_eq!(images.len() as u64, shape.hook_length_count(), "{lambda} k={k} l={l}");
                        assert_eq!(ts.len(), images.len());
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms_small() {
        let blocks = special_blocks(2, 2, 3).unwrap();
        assert!(!blocks.is_empty());
        for (b, _) in &blocks {
            assert!(check_diamond_block(b, 2, 2).unwrap() > 0);
        }
        // l = 2, d = 1 diagonal: x + x^3
        let t = StandardTableau::from_row_word(&p(&[1]), &[1, 1, 2, 2]).unwrap();
        let block = SeminormalBlock::new(t.outer(), t.inner()).unwrap();
        let v = diamond_matrix_entry(&block, &t, &t, 2).unwrap();
        assert_eq!(v, Rf::from_poly(Poly::from_ints(&[0, 1, 0, 1])));
        assert_eq!(a_d_power(1, 2).unwrap().evaluate_at_one().unwrap(), Rational::from_integer(2.into()));
    }

    #[test]
    fn annihilates_row_pairs() {
        let t = StandardTableau::from_row_word(&p(&[1]), &[1, 1, 1, 2]).unwrap();
        let block = SeminormalBlock::new(t.outer(), t.inner()).unwrap();
        let v = apply_e_word(&block, &palindromic_word(0, 2), &unit(block.dim(), block.index_of(&t).unwrap()));
        assert!(v.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn layer_identities_small() {
        for l in [2u32, 3] {
            for (b, _) in special_blocks(l, 2, 2).unwrap() {
                for t in b.tableaux() {
                    if classify(t, l, 2).unwrap().d.is_some() {
                        check_layer_identities(&b, t, l, 2).unwrap();
                    }
                }
                check_adjoint_rewriting(&b, l, 2).unwrap();
            }
        }
    }

    #[test]
    fn layer_product() {
        for r in 1..=4 {
            for s in 1..=4 {
                let (a, b) = layer_product_identity(r, s).unwrap();
                assert_eq!(a, b, "r={r} s={s}");
            }
        }
    }

    #[test]
    fn embeddings() {
        for (m, k, l, dim) in [(2, 2, 2, 2), (3, 2, 2, 5), (2, 3, 2, 2), (2, 2, 3, 2)] {
            let rep = verify_embedding(m, k, l).unwrap();
            assert!(rep.factorization_ok, "{rep:?}");
            assert!(rep.identity_ok, "{rep:?}");
            assert_eq!(rep.dim_expected, dim);
            assert_eq!(rep.dim_generic, dim, "{rep:?}");
            assert_eq!(rep.dim_at_root, dim, "{rep:?}");
        }
        assert!(verify_embedding(3, 2, 3).is_err());
    }

    #[test]
    fn straight_coefficients_at_root() {
        for (l, k, inner) in [(2u32, 2usize, 3u32), (2, 3, 2), (3, 2, 3)] {
            let rep = check_straight_coefficients(l, k, inner).unwrap();
            assert!(rep.consistent(), "{rep:?}");
            assert!(rep.diagonal_checked > 0);
            assert_eq!(rep.constant, CyclotomicNumber::zeta_pow(l, binom2(l)));
        }
    }
}
