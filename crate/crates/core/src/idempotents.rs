//! Eigenprojections of Murphy elements, path and orbit idempotents, and rank vectors.
//!
//! Idempotents are kept in the `T_w` basis so that evaluability is a statement
//! about their coefficients.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{clear_denominators, Field, Poly, Rational, RationalFunction};
use crate::error::{domain, invariant, Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement, MatrixRep, PoleWitness};
use crate::tableaux::{Partition, StandardTableau};

type Rf = RationalFunction;

/// Eigenvalues of an element on a representation, with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData {
    pub eigenvalues: Vec<Rf>,
    pub multiplicities: Vec<usize>,
}

impl SpectralData {
    /// Spectrum of `M_i` on `V(n, k)`, read off tableau contents.
    pub fn murphy(n: usize, i: usize, k: Option<usize>) -> Result<Self> {
        if i < 2 || i > n {
            return Err(Error::Index { index: i as i64, range: format!("2..={n}") });
        }
        let mut mult: BTreeMap<i64, usize> = BTreeMap::new();
        for lambda in Partition::all_with_max_rows(n as u32, k.unwrap_or(n)) {
            for t in crate::tableaux::enumerate_standard_tableaux(&lambda, &Partition::empty())? {
                *mult.entry(crate::hecke::murphy_exponent(&t, i)).or_default() += 1;
            }
        }
        Ok(SpectralData {
            eigenvalues: mult.keys().map(|&e| Rf::x_pow(e)).collect(),
            multiplicities: mult.values().copied().collect(),
        })
    }

    /// All exponents `i - 1 + c` with `|c| < i`, the spectrum of `M_i` on the regular representation.
    pub fn murphy_full(i: usize) -> Self {
        let i = i as i64;
        let exps: Vec<i64> = (0..=2 * (i - 1)).collect();
        SpectralData { eigenvalues: exps.iter().map(|&e| Rf::x_pow(e)).collect(), multiplicities: vec![1; exps.len()] }
    }
}

/// Coefficients (constant term first) of the polynomial that is `1` on `targets`
/// and `0` on the rest of `spectrum`.
pub fn lagrange_polynomial(spectrum: &[Rf], targets: &[Rf]) -> Result<Vec<Rf>> {
    for (a, x) in spectrum.iter().enumerate() {
        if spectrum[a + 1..].contains(x) {
            return Err(domain(format!("repeated eigenvalue {x}")));
        }
    }
    for t in targets {
        if !spectrum.contains(t) {
            return Err(domain(format!("target {t} is not in the spectrum")));
        }
    }
    let mut total = vec![Rf::zero(); spectrum.len().max(1)];
    for t in targets {
        // prod_{b != t} (X - b) / (t - b)
        let mut poly = vec![Rf::one()];
        let mut denom = Rf::one();
        for b in spectrum.iter().filter(|b| *b != t) {
            let mut next = vec![Rf::zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] = &next[k + 1] + c;
                next[k] = &next[k] - &(c * b);
            }
            poly = next;
            denom = &denom * &(t - b);
        }
        let inv = denom.inv().ok_or_else(|| domain("coinciding eigenvalues"))?;
        for (k, c) in poly.iter().enumerate() {
            total[k] = &total[k] + &(c * &inv);
        }
    }
    while total.len() > 1 && total.last().is_some_and(|c| c.is_zero()) {
        total.pop();
    }
    Ok(total)
}

/// `base P(M)` by Horner's rule, where `right_mul(a) = a M`.
fn apply_polynomial(
    alg: &HeckeAlgebra<Rf>,
    base: &HeckeElement,
    coeffs: &[Rf],
    right_mul: &dyn Fn(&HeckeElement) -> Result<HeckeElement>,
) -> Result<HeckeElement> {
    let Some(lead) = coeffs.last() else { return Ok(alg.zero()) };
    let mut acc = base.scale(lead);
    for c in coeffs.iter().rev().skip(1) {
        acc = right_mul(&acc)?;
        acc.add_assign(&base.scale(c));
    }
    Ok(acc)
}

/// `P(a)`, the projection onto the `targets` eigenspaces of `a` on `rep`.
pub fn eigenprojection(
    alg: &HeckeAlgebra<Rf>,
    a: &HeckeElement,
    rep: &MatrixRep,
    targets: &[Rf],
) -> Result<HeckeElement> {
    let mut spectrum: Vec<Rf> = Vec::new();
    for b in rep.blocks() {
        let m = b.image(alg, a)?;
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if r != c && !m.get(r, c).is_zero() {
                    return Err(domain("element is not diagonal on the representation"));
                }
            }
            if !spectrum.contains(m.get(r, r)) {
                spectrum.push(m.get(r, r).clone());
            }
        }
    }
    eigenprojection_with_spectrum(alg, a, &spectrum, targets)
}

/// `P(a)` for an explicitly given spectrum.
pub fn eigenprojection_with_spectrum(
    alg: &HeckeAlgebra<Rf>,
    a: &HeckeElement,
    spectrum: &[Rf],
    targets: &[Rf],
) -> Result<HeckeElement> {
    let coeffs = lagrange_polynomial(spectrum, targets)?;
    apply_polynomial(alg, &alg.one(), &coeffs, &|h| alg.multiply(h, a))
}

/// `base E` with `E` the projection of `M_i` onto the eigenvalues `x^e`, `e` in `targets`,
/// among the spectrum `x^e`, `e` in `spectrum`.
pub fn murphy_projection(
    alg: &HeckeAlgebra<Rf>,
    base: &HeckeElement,
    i: usize,
    spectrum: &[i64],
    targets: &[i64],
) -> Result<HeckeElement> {
    let sp: Vec<Rf> = spectrum.iter().map(|&e| Rf::x_pow(e)).collect();
    let tg: Vec<Rf> = targets.iter().map(|&e| Rf::x_pow(e)).collect();
    let coeffs = lagrange_polynomial(&sp, &tg)?;
    apply_polynomial(alg, base, &coeffs, &|h| Ok(alg.right_mul_murphy(h, i)))
}

/// `scale * num`, with polynomial coefficients in `num`. Idempotents are built in
/// this form so that the `T_w` arithmetic never reduces fractions.
#[derive(Clone, Debug)]
struct Scaled {
    num: HeckeElement<Poly>,
    scale: Rf,
}

/// Memoised path and orbit idempotents in a fixed `H_n`.
///
/// `p_t` is built from the idempotent of its prefix `t'`:
/// `p_t = p_{t'} prod_c (M_m - x^{m-1+c}) / (x^{m-1+c_t} - x^{m-1+c})` with `c` over the
/// other addable contents of the shape of `t'`. The orbit idempotent is the product of
/// grouped projections `P_[t],i` of `M_i`; on the image of the prefix product, `M_i` only
/// has the eigenvalues of cells addable to shapes in the prefix orbit, so the Lagrange
/// polynomial is taken over that spectrum.
#[derive(Debug)]
pub struct PathIdempotents {
    alg: HeckeAlgebra<Rf>,
    palg: HeckeAlgebra<Poly>,
    cache: BTreeMap<Vec<usize>, Scaled>,
    orbit_cache: BTreeMap<(u32, Vec<i64>), Scaled>,
}

impl PathIdempotents {
    pub fn new(n: usize) -> Result<Self> {
        if n > 6 {
            return Err(Error::SizeGuard(format!("T_w-basis idempotents need n <= 6, got {n}")));
        }
        let n = n.max(1);
        Ok(PathIdempotents {
            alg: HeckeAlgebra::generic(n)?,
            palg: HeckeAlgebra::with_parameter(n, Poly::monomial(1))?,
            cache: BTreeMap::new(),
            orbit_cache: BTreeMap::new(),
        })
    }

    pub fn algebra(&self) -> &HeckeAlgebra<Rf> {
        &self.alg
    }

    fn finish(&self, s: &Scaled) -> HeckeElement {
        s.num.map(|c| if c.is_zero() { Rf::zero() } else { Rf::from_poly(c.clone()) * s.scale.clone() })
    }

    /// `p_t` for a straight tableau `t` of size at most `n`, as an element of `H_n`.
    pub fn path(&mut self, t: &StandardTableau) -> Result<HeckeElement> {
        if !t.is_straight() {
            return Err(Error::Shape(format!("{t} is skew")));
        }
        if t.size() > self.alg.n() {
            return Err(Error::SizeMismatch(t.size(), self.alg.n()));
        }
        let s = self.path_rows(t, t.size())?;
        Ok(self.finish(&s))
    }

    fn path_rows(&mut self, t: &StandardTableau, m: usize) -> Result<Scaled> {
        let key: Vec<usize> = (1..=m).map(|i| t.row_of(i)).collect();
        if let Some(p) = self.cache.get(&key) {
            return Ok(p.clone());
        }
        let p = if m <= 1 {
            Scaled { num: self.palg.one(), scale: Rf::one() }
        } else {
            let prev = self.path_rows(t, m - 1)?;
            let shape = t.prefix(m - 1).shape().clone();
            let target = m as i64 - 1 + t.content(m);
            let mut acc = prev;
            for e in addable_exponents(&shape, m) {
                if e == target {
                    continue;
                }
                let shifted = self.palg.right_mul_murphy(&acc.num, m).sub(&acc.num.scale(&Poly::monomial(e as usize)));
                let gap = &Rf::x_pow(target) - &Rf::x_pow(e);
                let inv = gap.inv().ok_or_else(|| invariant("coinciding eigenvalues"))?;
                acc = Scaled { num: shifted, scale: &acc.scale * &inv };
            }
            acc
        };
        self.cache.insert(key, p.clone());
        Ok(p)
    }

    /// `p_[t] = prod_i P_[t],i` with `P_[t],i` the projection of `M_i` onto every
    /// eigenvalue congruent to that of `t` at `zeta_l`.
    pub fn orbit(&mut self, t: &StandardTableau, l: u32) -> Result<HeckeElement> {
        if l < 2 {
            return Err(domain(format!("l = {l}")));
        }
        if !t.is_straight() {
            return Err(Error::Shape(format!("{t} is skew")));
        }
        let n = t.size();
        if n != self.alg.n() {
            return Err(Error::SizeMismatch(n, self.alg.n()));
        }
        let residues: Vec<i64> = (1..=n).map(|i| (i as i64 - 1 + t.content(i)).rem_euclid(l as i64)).collect();
        let mut acc = Scaled { num: self.palg.one(), scale: Rf::one() };
        let mut start = 1;
        for m in (2..=n).rev() {
            if let Some(p) = self.orbit_cache.get(&(l, residues[..m].to_vec())) {
                acc = p.clone();
                start = m;
                break;
            }
        }
        for m in start + 1..=n {
            // shapes reached by prefixes in the orbit of t restricted to 1..m-1
            let prefix = t.prefix(m - 1);
            let class = crate::tableaux::l_equivalence_class(&prefix, l, m - 1)?;
            let mut spectrum: Vec<i64> = Vec::new();
            for s in &class {
                for e in addable_exponents(s.shape(), m) {
                    if !spectrum.contains(&e) {
                        spectrum.push(e);
                    }
                }
            }
            spectrum.sort_unstable();
            let targets: Vec<i64> =
                spectrum.iter().copied().filter(|e| e.rem_euclid(l as i64) == residues[m - 1]).collect();
            let sp: Vec<Rf> = spectrum.iter().map(|&e| Rf::x_pow(e)).collect();
            let tg: Vec<Rf> = targets.iter().map(|&e| Rf::x_pow(e)).collect();
            let (coeffs, scale) = clear_denominators(&lagrange_polynomial(&sp, &tg)?);
            let mut num = acc.num.scale(coeffs.last().unwrap());
            for c in coeffs.iter().rev().skip(1) {
                num = self.palg.right_mul_murphy(&num, m);
                num.add_assign(&acc.num.scale(c));
            }
            acc = Scaled { num, scale: &acc.scale * &scale };
            self.orbit_cache.insert((l, residues[..m].to_vec()), acc.clone());
        }
        Ok(self.finish(&acc))
    }
}

/// Exponents `m - 1 + c` of `M_m` for the cells addable to `shape`.
fn addable_exponents(shape: &Partition, m: usize) -> Vec<i64> {
    shape.addable_cells().iter().map(|&(r, c)| m as i64 - 1 + c as i64 - r as i64).collect()
}

/// `p_t` in `H_n`, `n = |t|`.
pub fn path_idempotent(t: &StandardTableau) -> Result<HeckeElement> {
    PathIdempotents::new(t.size())?.path(t)
}

/// `p_[t]` in `H_n`, `n = |t|`.
pub fn orbit_idempotent(t: &StandardTableau, l: u32) -> Result<HeckeElement> {
    PathIdempotents::new(t.size())?.orbit(t, l)
}

/// Whether every coefficient of `a` is evaluable at `zeta_l`; otherwise a pole witness.
pub fn is_evaluable(alg: &HeckeAlgebra<Rf>, a: &HeckeElement, l: u32) -> core::result::Result<(), PoleWitness> {
    alg.evaluability(a, l)
}

/// `lambda -> Tr_lambda(p)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RankVector(pub BTreeMap<Partition, u64>);

impl RankVector {
    pub fn get(&self, lambda: &Partition) -> u64 {
        self.0.get(lambda).copied().unwrap_or(0)
    }

    /// The lexicographically highest partition with a nonzero entry.
    pub fn top(&self) -> Option<&Partition> {
        self.0.iter().filter(|(_, &r)| r > 0).map(|(p, _)| p).max_by(|a, b| a.lex_cmp(b))
    }

    pub fn is_zero(&self) -> bool {
        self.0.values().all(|&r| r == 0)
    }
}

/// Block traces of an idempotent on `V(n, k)`. Fails unless `p` squares to itself
/// blockwise and each trace is a non-negative integer.
pub fn rank_vector(alg: &HeckeAlgebra<Rf>, p: &HeckeElement, k: Option<usize>) -> Result<RankVector> {
    let rep = MatrixRep::seminormal(alg.n(), k)?;
    let mut out = BTreeMap::new();
    for b in rep.blocks() {
        let m = b.image(alg, p)?;
        if m.mul(&m) != m {
            return Err(domain(format!("element is not idempotent on the block {}", b.outer())));
        }
        let tr = m.trace();
        let r = tr
            .as_rational()
            .filter(|r| r.is_integer() && *r >= Rational::from_integer(0.into()))
            .ok_or_else(|| invariant(format!("trace {tr} on {} is not a non-negative integer", b.outer())))?;
        let r: u64 = r.to_integer().try_into().map_err(|_| invariant("trace overflow"))?;
        out.insert(b.outer().clone(), r);
    }
    Ok(RankVector(out))
}

/// `p_t(1)` in the rational group algebra of `S_n`, by the recursion
/// `p_t = prod_s (p e_{m-1} p - a_{d(s)} p) / (a_{d(t)} - a_{d(s)})` in the corner algebra
/// `p H p`, `p = p_{t'}`, with `a_d(1) = (d+1)/d`.
pub fn path_idempotent_at_one(t: &StandardTableau) -> Result<HeckeElement<Rational>> {
    if !t.is_straight() {
        return Err(Error::Shape(format!("{t} is skew")));
    }
    let n = t.size().max(1);
    let alg = HeckeAlgebra::at_one(n)?;
    let a1 = |d: i64| Rational::new((d + 1).into(), d.into());
    let mut p = alg.one();
    for m in 2..=t.size() {
        let shape = t.prefix(m - 1).shape().clone();
        let prev_content = t.content(m - 1);
        let dt = prev_content - t.content(m);
        let pep = alg.multiply(&alg.multiply(&p, &alg.e(m - 1)?)?, &p)?;
        let mut acc = p.clone();
        for (r, c) in shape.addable_cells() {
            let ds = prev_content - (c as i64 - r as i64);
            if ds == dt {
                continue;
            }
            if ds == 0 {
                return Err(invariant("zero axial distance"));
            }
            let (as_, at) = (a1(ds), a1(dt));
            let f = pep.sub(&p.scale(&as_)).scale(&Field::inv(&(&at - &as_)).unwrap());
            acc = alg.multiply(&acc, &f)?;
        }
        p = acc;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Poly;
    use crate::tableaux::enumerate_standard_tableaux;

    fn tabs(n: u32) -> Vec<StandardTableau> {
        Partition::all(n).iter().flat_map(|l| enumerate_standard_tableaux(l, &Partition::empty()).unwrap()).collect()
    }

    fn t1_plus_one_over() -> HeckeElement {
        let alg = HeckeAlgebra::generic(2).unwrap();
        let inv = Rf::from_poly(Poly::from_ints(&[1, 1])).inv().unwrap();
        alg.generator(1).unwrap().add(&alg.one()).scale(&inv)
    }

    #[test]
    fn eigenprojection_of_t1() {
        let alg = HeckeAlgebra::generic(2).unwrap();
        let spectrum = [Rf::x(), Rf::from_int(-1)];
        let t1 = alg.generator(1).unwrap();
        assert_eq!(eigenprojection_with_spectrum(&alg, &t1, &spectrum, &[Rf::x()]).unwrap(), t1_plus_one_over());
        assert_eq!(eigenprojection_with_spectrum(&alg, &t1, &spectrum, &spectrum).unwrap(), alg.one());
        assert!(eigenprojection_with_spectrum(&alg, &t1, &spectrum, &[]).unwrap().is_zero());
        assert!(eigenprojection_with_spectrum(&alg, &t1, &spectrum, &[Rf::one()]).is_err());
        let rep = MatrixRep::seminormal(2, None).unwrap();
        assert_eq!(eigenprojection(&alg, &t1, &rep, &[Rf::x()]).unwrap(), t1_plus_one_over());
    }

    #[test]
    fn row_tableau_n2() {
        let t = StandardTableau::from_straight_rows(&[vec![1, 2]]).unwrap();
        assert_eq!(path_idempotent(&t).unwrap(), t1_plus_one_over());
        let one = path_idempotent_at_one(&t).unwrap();
        let alg = HeckeAlgebra::at_one(2).unwrap();
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(one, alg.one().add(&alg.generator(1).unwrap()).scale(&half));
    }

    #[test]
    fn resolution_of_identity() {
        for n in 1..=4u32 {
            let mut cache = PathIdempotents::new(n as usize).unwrap();
            let ts = tabs(n);
            let ps: Vec<_> = ts.iter().map(|t| cache.path(t).unwrap()).collect();
            let alg = cache.algebra().clone();
            let mut sum = alg.zero();
            for p in &ps {
                sum.add_assign(p);
            }
            assert_eq!(sum, alg.one(), "n = {n}");
            if n <= 3 {
                for (a, p) in ps.iter().enumerate() {
                    for (b, r) in ps.iter().enumerate() {
                        let prod = alg.multiply(p, r).unwrap();
                        if a == b {
                            assert_eq!(prod, *p);
                        } else {
                            assert!(prod.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rank_vectors() {
        let alg = HeckeAlgebra::generic(2).unwrap();
        let r = rank_vector(&alg, &t1_plus_one_over(), None).unwrap();
        assert_eq!(r.get(&Partition::new(&[2]).unwrap()), 1);
        assert_eq!(r.get(&Partition::new(&[1, 1]).unwrap()), 0);
        assert!(rank_vector(&alg, &alg.generator(1).unwrap(), None).is_err());
        let mut cache = PathIdempotents::new(4).unwrap();
        let alg = cache.algebra().clone();
        for t in tabs(4) {
            let r = rank_vector(&alg, &cache.path(&t).unwrap(), None).unwrap();
            for (lambda, v) in &r.0 {
                assert_eq!(*v, u64::from(lambda == t.shape()));
            }
        }
    }

    #[test]
    fn orbit_idempotents_small() {
        let alg = HeckeAlgebra::generic(2).unwrap();
        let t = StandardTableau::from_straight_rows(&[vec![1, 2]]).unwrap();
        assert_eq!(orbit_idempotent(&t, 2).unwrap(), alg.one());
        assert_eq!(orbit_idempotent(&t, 5).unwrap(), path_idempotent(&t).unwrap());

        let t1 = StandardTableau::from_straight_rows(&[vec![1, 2], vec![3]]).unwrap();
        let t2 = StandardTableau::from_straight_rows(&[vec![1, 3], vec![2]]).unwrap();
        let mut cache = PathIdempotents::new(3).unwrap();
        let p1 = cache.path(&t1).unwrap();
        let p2 = cache.path(&t2).unwrap();
        let orbit = cache.orbit(&t1, 2).unwrap();
        assert_eq!(orbit, p1.add(&p2));
        let alg = cache.algebra();
        let w = is_evaluable(alg, &p1, 2).unwrap_err();
        assert!(w.order > 0);
        assert_eq!(w.coefficient.pole_order(2), w.order);
        assert!(is_evaluable(alg, &orbit, 2).is_ok());
        for i in 2..=3 {
            assert!(is_evaluable(alg, &alg.murphy(i).unwrap(), 2).is_ok());
        }
    }

    #[test]
    fn at_one_agrees_with_evaluation() {
        for n in 1..=4u32 {
            let mut cache = PathIdempotents::new(n as usize).unwrap();
            for t in tabs(n) {
                let generic = cache.path(&t).unwrap();
                let ev = cache.algebra().evaluate_at_one(&generic).unwrap();
                let direct = path_idempotent_at_one(&t).unwrap();
                assert_eq!(ev, direct, "{t}");
                let alg = HeckeAlgebra::at_one(n as usize).unwrap();
                assert_eq!(alg.multiply(&direct, &direct).unwrap(), direct);
            }
        }
    }
}
