//! Specht modules `S^lambda = H_n A_{lambda'} W^lambda` inside the permutation
//! module, and ranks of their invariant forms at roots of unity.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::modules::{PermutationModule, SparseVector};
use crate::arith::{CyclotomicNumber, EchelonBasis, Field, Matrix};
use crate::error::{Error, Result};
use crate::tableaux::{Composition, Partition};

/// Bilinear form on `W^lambda` used for Gram matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GramForm {
    /// `<L_w, L_v> = delta_{wv} q^{l(w)}`, for which every `T_i` is self-adjoint.
    Contravariant,
    /// `<L_w, L_v> = delta_{wv}`.
    Orthonormal,
}

/// How Gram ranks are matched with simple-module labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Labeling {
    Identity,
    Conjugate,
}

impl Labeling {
    pub fn apply(&self, lambda: &Partition) -> Partition {
        match self {
            Labeling::Identity => lambda.clone(),
            Labeling::Conjugate => lambda.conjugate(),
        }
    }
}

/// A basis (in echelon form) of `S^lambda` as vectors in `W^lambda`, over the field of `q`.
#[derive(Clone, Debug)]
pub struct SpechtModule<F> {
    lambda: Partition,
    q: F,
    ambient: PermutationModule,
    basis: Vec<Vec<F>>,
}

impl<F: Field> SpechtModule<F> {
    pub fn new(lambda: &Partition, q: F) -> Result<Self> {
        let n = lambda.size() as usize;
        if n > 8 {
            return Err(Error::SizeGuard(format!("n = {n}")));
        }
        let ambient = PermutationModule::new(&Composition(lambda.parts().to_vec()))?;
        let target = lambda.hook_length_count() as usize;
        let u = q.neg().inv().ok_or_else(|| Error::Domain("q = 0".into()))?;
        let blocks = lambda.conjugate().parts().to_vec();
        let dim = ambient.dim();
        let mut order: Vec<u32> = (0..dim as u32).collect();
        order.sort_by_key(|&b| (ambient.length(b), b));

        let mut span = EchelonBasis::new();
        let mut gens: Vec<Vec<F>> = Vec::new();
        for &b in &order {
            if span.dim() >= target {
                break;
            }
            let mut v = SparseVector::new();
            v.insert(b, q.one_like());
            let av = antisymmetrize(&ambient, &q, &u, &blocks, v);
            let dense = densify(&av, dim, &q);
            if span.insert(dense.clone()) {
                gens.push(dense);
            }
        }
        // close under the generators
        let mut queue = gens;
        while let Some(v) = queue.pop() {
            let sv = sparsify(&v);
            for i in 1..n {
                let w = densify(&ambient.apply_t(&q, i, &sv), dim, &q);
                if span.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        let basis = span.vectors().map(|v| v.to_vec()).collect();
        Ok(SpechtModule { lambda: lambda.clone(), q, ambient, basis })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> &PermutationModule {
        &self.ambient
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    /// Gram matrix of the basis under `form`.
    pub fn gram(&self, form: GramForm) -> Matrix<F> {
        let dim = self.ambient.dim();
        let max_len = (0..dim as u32).map(|b| self.ambient.length(b)).max().unwrap_or(0);
        let mut pow = vec![self.q.one_like()];
        for k in 1..=max_len as usize {
            pow.push(pow[k - 1].mul(&self.q));
        }
        let weight: Vec<F> = (0..dim as u32)
            .map(|b| match form {
                GramForm::Contravariant => pow[self.ambient.length(b) as usize].clone(),
                GramForm::Orthonormal => self.q.one_like(),
            })
            .collect();
        let f = self.basis.len();
        let mut g = Matrix::zeros(f, f, &self.q.zero_like());
        for a in 0..f {
            for c in a..f {
                let mut s = self.q.zero_like();
                for w in 0..dim {
                    let (x, y) = (&self.basis[a][w], &self.basis[c][w]);
                    if !x.is_zero() && !y.is_zero() {
                        s = s.add(&x.mul(y).mul(&weight[w]));
                    }
                }
                g.set(a, c, s.clone());
                g.set(c, a, s);
            }
        }
        g
    }

    /// Whether the span is closed under every `T_i`.
    pub fn is_submodule(&self) -> bool {
        let mut span = EchelonBasis::new();
        for v in &self.basis {
            span.insert(v.clone());
        }
        let dim = self.ambient.dim();
        self.basis.iter().all(|v| {
            let sv = sparsify(v);
            (1..self.ambient.n()).all(|i| span.contains(&densify(&self.ambient.apply_t(&self.q, i, &sv), dim, &self.q)))
        })
    }
}

/// `sum_{w in Y_mu} u^{l(w)} T_w` applied to `v`, where `Y_mu` is the Young subgroup
/// on consecutive blocks of sizes `blocks`. Per block of size `m` this is
/// `F_m ... F_2` with `F_j = sum_{i<j} u^i T_{j-i} ... T_{j-1}`.
fn antisymmetrize<F: Field>(
    module: &PermutationModule,
    q: &F,
    u: &F,
    blocks: &[u32],
    mut v: SparseVector<F>,
) -> SparseVector<F> {
    let mut offset = 0usize;
    for &m in blocks {
        let m = m as usize;
        for j in 2..=m {
            let mut total = v.clone();
            let mut cur = v;
            let mut coeff = q.one_like();
            for i in 1..j {
                cur = module.apply_t(q, offset + j - i, &cur);
                coeff = coeff.mul(u);
                add_scaled(&mut total, &coeff, &cur, q);
            }
            v = total;
        }
        offset += m;
    }
    v
}

fn add_scaled<F: Field>(acc: &mut SparseVector<F>, c: &F, v: &SparseVector<F>, q: &F) {
    for (&b, x) in v {
        let e = acc.entry(b).or_insert_with(|| q.zero_like());
        *e = e.add(&c.mul(x));
    }
    acc.retain(|_, x| !x.is_zero());
}

fn densify<F: Field>(v: &SparseVector<F>, dim: usize, q: &F) -> Vec<F> {
    let mut out = vec![q.zero_like(); dim];
    for (&b, x) in v {
        out[b as usize] = x.clone();
    }
    out
}

fn sparsify<F: Field>(v: &[F]) -> SparseVector<F> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(b, x)| (b as u32, x.clone())).collect()
}

/// A basis of `S^lambda` over `Q(zeta_l)`.
pub fn specht_basis(lambda: &Partition, l: u32) -> Result<SpechtModule<CyclotomicNumber>> {
    if l < 2 {
        return Err(Error::Domain(format!("l = {l}")));
    }
    SpechtModule::new(lambda, CyclotomicNumber::zeta_pow(l, 1))
}

/// Rank at `q = zeta_l` of the Gram matrix of `S^lambda`.
pub fn specht_gram_rank(lambda: &Partition, l: u32, form: GramForm) -> Result<usize> {
    Ok(specht_basis(lambda, l)?.gram(form).rank())
}

/// Chooses the labeling under which a nonzero Gram rank occurs exactly for
/// `l`-regular labels, over every partition of `n <= max_n` and every `l` in `ls`.
pub fn calibrate_labeling(max_n: u32, ls: &[u32], form: GramForm) -> Result<Labeling> {
    let mut ranks = Vec::new();
    for &l in ls {
        for n in 1..=max_n {
            for lambda in Partition::all(n) {
                ranks.push((l, lambda.clone(), specht_gram_rank(&lambda, l, form)?));
            }
        }
    }
    for labeling in [Labeling::Identity, Labeling::Conjugate] {
        if ranks.iter().all(|(l, lambda, r)| (*r != 0) == labeling.apply(lambda).is_l_regular(*l)) {
            return Ok(labeling);
        }
    }
    let witness: Vec<_> = ranks.iter().map(|(l, p, r)| format!("l={l} {p}:{r}")).collect();
    Err(Error::Invariant(format!("no labeling matches Gram ranks [{}]", witness.join(", "))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{RationalFunction, Ring};
    use crate::hecke::HeckeAlgebra;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn generic_dimensions() {
        for n in 1..=5 {
            for lambda in Partition::all(n) {
                let s = SpechtModule::new(&lambda, RationalFunction::x()).unwrap();
                assert_eq!(s.dim() as u64, lambda.hook_length_count(), "{lambda}");
                assert!(s.is_submodule());
            }
        }
    }

    #[test]
    fn antisymmetrizer_matches_sum() {
        let l = 5;
        let alg = HeckeAlgebra::at_root(4, l).unwrap();
        let q = alg.q().clone();
        let u = q.neg().inv().unwrap();
        let module = PermutationModule::new(&Composition(vec![1, 1, 1, 1])).unwrap();
        let blocks = [3u32, 1];
        let g = alg.group();
        let mut a = alg.zero();
        for w in 0..g.order() as u32 {
            let p = g.perm(w);
            if p[3] == 4 {
                let mut c = q.one_like();
                for _ in 0..g.length(w) {
                    c = c.mul(&u);
                }
                a.add_assign(&alg.term(w, c));
            }
        }
        for b in 0..module.dim() as u32 {
            let mut v = SparseVector::new();
            v.insert(b, q.one_like());
            let fast = antisymmetrize(&module, &q, &u, &blocks, v.clone());
            let slow = alg.act(&a, &v, &|i, x| module.apply_t(&q, i, x), &|acc, c, x| add_scaled(acc, c, x, &q), SparseVector::new());
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn small_ranks() {
        assert_eq!(specht_gram_rank(&p(&[2]), 2, GramForm::Contravariant).unwrap(), 1);
        assert_eq!(specht_gram_rank(&p(&[1, 1]), 2, GramForm::Contravariant).unwrap(), 0);
        assert_eq!(specht_gram_rank(&p(&[2, 1]), 3, GramForm::Contravariant).unwrap(), 1);
        assert_eq!(specht_gram_rank(&p(&[2, 1]), 2, GramForm::Contravariant).unwrap(), 2);
    }

    #[test]
    fn orthonormal_form_cannot_be_calibrated() {
        assert_eq!(specht_gram_rank(&p(&[1, 1]), 2, GramForm::Orthonormal).unwrap(), 1);
        assert!(calibrate_labeling(3, &[2, 3], GramForm::Orthonormal).is_err());
    }

    #[test]
    fn calibration() {
        assert_eq!(calibrate_labeling(4, &[2, 3, 4], GramForm::Contravariant).unwrap(), Labeling::Identity);
    }
}
