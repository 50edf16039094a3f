//! The Hecke algebra `H_q(W)` of a Coxeter groupoid, on the basis `f(w)`,
//! `w ∈ W \ {0}`, with coefficients in any exact ring.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::groupoid::Groupoid;
use crate::linalg::Matrix;
use crate::relations::{
    failing, family_length_mismatches, family_relations, presentation_relations, Gen, Relation, RelationModel,
};
use crate::scalar::{Ring, Specialize};
use crate::{Error, LaurentPoly, Rational};

/// Sparse linear combination of basis elements `f(w)`, keyed by basis index.
pub type HeckeElement<S> = BTreeMap<usize, S>;

fn add_into<S: Ring>(x: &mut HeckeElement<S>, k: usize, c: &S) {
    if c.is_zero() {
        return;
    }
    match x.get_mut(&k) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                x.remove(&k);
            }
        }
        None => {
            x.insert(k, c.clone());
        }
    }
}

#[derive(Clone, Debug)]
pub struct HeckeAlgebra<S> {
    groupoid: Arc<Groupoid>,
    q: S,
    q_minus_one: S,
}

impl<S: Ring> HeckeAlgebra<S> {
    pub fn new(groupoid: Arc<Groupoid>, q: S) -> Self {
        let q_minus_one = q.clone() - S::one();
        HeckeAlgebra { groupoid, q, q_minus_one }
    }

    pub fn groupoid(&self) -> &Groupoid {
        &self.groupoid
    }

    pub fn q(&self) -> &S {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.groupoid.len()
    }

    pub fn basis(&self, k: usize) -> HeckeElement<S> {
        BTreeMap::from([(k, S::one())])
    }

    pub fn e(&self, a: usize) -> HeckeElement<S> {
        self.basis(self.groupoid.identity_index(a))
    }

    pub fn t(&self, i: usize, a: usize) -> HeckeElement<S> {
        self.basis(self.groupoid.generator_index(i, a))
    }

    pub fn one(&self) -> HeckeElement<S> {
        (0..self.groupoid.root_system().num_domains()).map(|a| (self.groupoid.identity_index(a), S::one())).collect()
    }

    /// `E_a x`.
    pub fn lmul_e(&self, a: usize, x: &HeckeElement<S>) -> HeckeElement<S> {
        x.iter().filter(|(k, _)| self.groupoid.element(**k).target == a).map(|(k, c)| (*k, c.clone())).collect()
    }

    /// `T_{i,a} x`.
    pub fn lmul_t(&self, i: usize, a: usize, x: &HeckeElement<S>) -> HeckeElement<S> {
        let g = &*self.groupoid;
        let moves = g.root_system().act(i, a) != a;
        let mut out = BTreeMap::new();
        for (&w, c) in x {
            if g.element(w).target != a {
                continue;
            }
            let u = g.left_mul_index(i, w);
            if moves || g.length_of(u) > g.length_of(w) {
                add_into(&mut out, u, c);
            } else {
                add_into(&mut out, w, &c.mul_ref(&self.q_minus_one));
                add_into(&mut out, u, &c.mul_ref(&self.q));
            }
        }
        out
    }

    /// `f(u) x`, through the canonical reduced word of `u`.
    pub fn lmul_basis(&self, u: usize, x: &HeckeElement<S>) -> HeckeElement<S> {
        let g = &*self.groupoid;
        let word = g.canonical_word(u);
        let rs = g.root_system();
        let mut cur = self.lmul_e(word.base, x);
        let mut d = word.base;
        for &i in word.letters.iter().rev() {
            cur = self.lmul_t(i, d, &cur);
            d = rs.act(i, d);
        }
        cur
    }

    pub fn product(&self, x: &HeckeElement<S>, y: &HeckeElement<S>) -> HeckeElement<S> {
        let mut out = BTreeMap::new();
        for (&u, c) in x {
            for (k, v) in self.lmul_basis(u, y) {
                add_into(&mut out, k, &c.mul_ref(&v));
            }
        }
        out
    }

    pub fn add(&self, x: &HeckeElement<S>, y: &HeckeElement<S>) -> HeckeElement<S> {
        let mut out = x.clone();
        for (k, c) in y {
            add_into(&mut out, *k, c);
        }
        out
    }

    pub fn scale(&self, x: &HeckeElement<S>, c: &S) -> HeckeElement<S> {
        x.iter().map(|(k, v)| (*k, v.mul_ref(c))).filter(|(_, v)| !v.is_zero()).collect()
    }

    /// `f(u) f(v)` for all basis pairs, indexed `u * dim + v`.
    pub fn structure_constants(&self) -> Vec<Vec<(usize, S)>> {
        let n = self.dim();
        (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (u, v) = (k / n, k % n);
                self.lmul_basis(u, &self.basis(v)).into_iter().collect()
            })
            .collect()
    }

    /// Matrix of `T_{i,a}` acting by left multiplication; columns are images of basis vectors.
    pub fn left_matrix(&self, g: Gen) -> Matrix<S> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            let img = self.left_gen(g, &self.basis(k));
            for (r, c) in img {
                m[(r, k)] = c;
            }
        }
        m
    }

    pub fn verify_presentation(&self) -> PresentationReport {
        let rs = self.groupoid.root_system();
        let general = presentation_relations(rs);
        let family = family_relations(rs);
        let fail = |rels: &[Relation]| failing(self, rels).into_iter().map(|r| r.to_string()).collect::<Vec<_>>();
        PresentationReport {
            general_checked: general.len(),
            general_failures: fail(&general),
            family_checked: family.len(),
            family_failures: fail(&family),
            length_mismatches: family_length_mismatches(rs)
                .into_iter()
                .map(|(i, j, a, m, c)| format!("i={} j={} a={}: family {} vs coxeter {:?}", i + 1, j + 1, rs.domain(a), m, c))
                .collect(),
        }
    }
}

impl<S: Ring> RelationModel for HeckeAlgebra<S> {
    type Value = HeckeElement<S>;

    fn zero(&self) -> HeckeElement<S> {
        BTreeMap::new()
    }

    fn one(&self) -> HeckeElement<S> {
        HeckeAlgebra::one(self)
    }

    fn left_gen(&self, g: Gen, x: &HeckeElement<S>) -> HeckeElement<S> {
        match g {
            Gen::E(a) => self.lmul_e(a, x),
            Gen::T(i, a) => self.lmul_t(i, a, x),
        }
    }

    fn add_scaled(&self, acc: &mut HeckeElement<S>, c: &LaurentPoly, x: &HeckeElement<S>) {
        let c = c.lift(&self.q, None).expect("relation coefficients are polynomials in q");
        for (k, v) in x {
            add_into(acc, *k, &v.mul_ref(&c));
        }
    }

    fn equal(&self, x: &HeckeElement<S>, y: &HeckeElement<S>) -> bool {
        x == y
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationReport {
    pub general_checked: usize,
    pub general_failures: Vec<String>,
    pub family_checked: usize,
    pub family_failures: Vec<String>,
    pub length_mismatches: Vec<String>,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.general_failures.is_empty() && self.family_failures.is_empty() && self.length_mismatches.is_empty()
    }
}

/// Product of two table-expanded elements using precomputed structure constants.
fn table_product<S: Ring>(table: &[Vec<(usize, S)>], n: usize, x: &[(usize, S)], y: &[(usize, S)]) -> HeckeElement<S> {
    let mut out = BTreeMap::new();
    for (u, a) in x {
        for (v, b) in y {
            let ab = a.mul_ref(b);
            for (w, c) in &table[u * n + v] {
                add_into(&mut out, *w, &ab.mul_ref(c));
            }
        }
    }
    out
}

fn assoc_triple<S: Ring>(table: &[Vec<(usize, S)>], n: usize, u: usize, v: usize, w: usize) -> bool {
    let one = S::one();
    let uv: Vec<(usize, S)> = table[u * n + v].clone();
    let vw: Vec<(usize, S)> = table[v * n + w].clone();
    let left = table_product(table, n, &uv, &[(w, one.clone())]);
    let right = table_product(table, n, &[(u, one)], &vw);
    left == right
}

/// Checks `(f(u)f(v))f(w) = f(u)(f(v)f(w))` on all triples, or on `samples` random ones.
pub fn check_associativity<S: Ring>(
    table: &[Vec<(usize, S)>],
    n: usize,
    samples: Option<(usize, u64)>,
) -> Result<usize, (usize, usize, usize)> {
    let triples: Vec<(usize, usize, usize)> = match samples {
        None => (0..n * n * n).map(|k| (k / (n * n), (k / n) % n, k % n)).collect(),
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))).collect()
        }
    };
    match triples.par_iter().find_any(|&&(u, v, w)| !assoc_triple(table, n, u, v, w)) {
        Some(&t) => Err(t),
        None => Ok(triples.len()),
    }
}

/// Random composable triple sampling biased towards nonzero products.
pub fn composable_triples(g: &Groupoid, count: usize, seed: u64) -> Vec<(usize, usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let na = g.root_system().num_domains();
    let mut by_hom: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); na]; na];
    for (k, w) in g.elements().iter().enumerate() {
        by_hom[w.source][w.target].push(k);
    }
    (0..count)
        .map(|_| {
            let (a, b, c, d) = (rng.gen_range(0..na), rng.gen_range(0..na), rng.gen_range(0..na), rng.gen_range(0..na));
            let w = *by_hom[a][b].choose(&mut rng).unwrap();
            let v = *by_hom[b][c].choose(&mut rng).unwrap();
            let u = *by_hom[c][d].choose(&mut rng).unwrap();
            (u, v, w)
        })
        .collect()
}

/// Associativity on the given triples, using the table.
pub fn check_associativity_on<S: Ring>(
    table: &[Vec<(usize, S)>],
    n: usize,
    triples: &[(usize, usize, usize)],
) -> Result<usize, (usize, usize, usize)> {
    match triples.par_iter().find_any(|&&(u, v, w)| !assoc_triple(table, n, u, v, w)) {
        Some(&t) => Err(t),
        None => Ok(triples.len()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityReport {
    pub entries: usize,
    pub negative_exponent: Option<(usize, usize)>,
    pub degree_exceeded: Option<(usize, usize)>,
}

impl IntegralityReport {
    pub fn passed(&self) -> bool {
        self.negative_exponent.is_none() && self.degree_exceeded.is_none()
    }
}

/// Every structure constant of `f(u) f(v)` lies in `Z[q]` with degree at most `ℓ(u)`.
pub fn check_integrality(g: &Groupoid, table: &[Vec<(usize, LaurentPoly)>]) -> IntegralityReport {
    let n = g.len();
    let mut rep = IntegralityReport { entries: 0, negative_exponent: None, degree_exceeded: None };
    for (k, row) in table.iter().enumerate() {
        let (u, v) = (k / n, k % n);
        for (_, c) in row {
            rep.entries += 1;
            if !c.is_polynomial() && rep.negative_exponent.is_none() {
                rep.negative_exponent = Some((u, v));
            }
            if c.max_exponent().unwrap_or(0) > g.length_of(u) as i64 && rep.degree_exceeded.is_none() {
                rep.degree_exceeded = Some((u, v));
            }
        }
    }
    rep
}

/// Compares the specialisation of the polynomial table at `q0` with a table computed
/// directly over the rationals.
pub fn specialization_matches(
    poly: &[Vec<(usize, LaurentPoly)>],
    eval: &[Vec<(usize, Rational)>],
    q0: &Rational,
) -> Result<bool, Error> {
    for (p, e) in poly.iter().zip(eval) {
        let mut spec: Vec<(usize, Rational)> = Vec::with_capacity(p.len());
        for (k, c) in p {
            let v = c.eval_at(q0)?;
            if !num_traits::Zero::is_zero(&v) {
                spec.push((*k, v));
            }
        }
        if &spec != e {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::Family;
    use crate::groupoid::DEFAULT_MAX_ELEMENTS;
    use crate::rootsys::build_root_system;
    use crate::scalar::rat;
    use num_traits::One;

    fn alg_poly(f: Family) -> HeckeAlgebra<LaurentPoly> {
        let rs = Arc::new(build_root_system(f).unwrap());
        HeckeAlgebra::new(Arc::new(Groupoid::enumerate(rs, DEFAULT_MAX_ELEMENTS).unwrap()), LaurentPoly::q())
    }

    #[test]
    fn quadratic_relation_in_poly_mode() {
        let h = alg_poly(Family::Gl { m: 1, n: 1 });
        // generator 1 fixes d_e = (0,0,1,1)
        let t = h.t(0, 0);
        let t2 = h.product(&t, &t);
        let q = LaurentPoly::q();
        let expected = h.add(&h.scale(&t, &(q.clone() - LaurentPoly::one())), &h.scale(&h.e(0), &q));
        assert_eq!(t2, expected);
    }

    #[test]
    fn presentation_holds_for_small_families() {
        for f in [Family::Gl { m: 1, n: 1 }, Family::OspOdd { m: 1, n: 1 }, Family::OspEven { m: 1, n: 1 }] {
            let rep = alg_poly(f).verify_presentation();
            assert!(rep.passed(), "{}: {:?}", f, rep);
        }
    }

    #[test]
    fn unit_is_identity() {
        let h = alg_poly(Family::OspOdd { m: 1, n: 1 });
        for k in 0..h.dim() {
            let b = h.basis(k);
            assert_eq!(h.product(&h.one(), &b), b);
            assert_eq!(h.product(&b, &h.one()), b);
        }
    }

    #[test]
    fn eval_mode_at_one_is_groupoid_algebra() {
        let rs = Arc::new(build_root_system(Family::OspOdd { m: 1, n: 1 }).unwrap());
        let g = Arc::new(Groupoid::enumerate(rs, DEFAULT_MAX_ELEMENTS).unwrap());
        let h = HeckeAlgebra::new(g.clone(), rat(1, 1));
        for u in 0..g.len() {
            for v in 0..g.len() {
                let p = h.product(&h.basis(u), &h.basis(v));
                match g.multiply_index(u, v) {
                    None => assert!(p.is_empty()),
                    Some(w) => assert_eq!(p, h.basis(w)),
                }
            }
        }
    }
}
