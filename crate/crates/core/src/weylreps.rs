//! Classical Iwahori-Hecke algebras of type A, B and D: Poincaré polynomials,
//! semisimplicity, seminormal irreducible representations and an independent
//! decomposition of the regular module.
//!
//! Generator indices follow the Dynkin numbering of the root systems built by
//! [`WeylType::root_system`]; for B and D the last generator is the special one.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::groupoid::{Groupoid, DEFAULT_MAX_ELEMENTS};
use crate::hecke::HeckeAlgebra;
use crate::linalg::{to_sparse, Matrix, SpanBuilder};
use crate::relations::{alternating, Gen};
use crate::rootsys::{RootSystemData, RootSystemParts, RootVector};
use crate::scalar::{Field, Ring, Specialize};
use crate::{domains::Domain, Error, LaurentPoly, Rational, RationalFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylType {
    /// `A(k)`: the symmetric group `S_{k+1}`.
    A(usize),
    B(usize),
    D(usize),
}

impl WeylType {
    /// `S_n` for `n >= 1`.
    pub fn symmetric(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameters("S_n needs n >= 1".into()));
        }
        Ok(WeylType::A(n - 1))
    }

    pub fn validate(self) -> Result<Self, Error> {
        match self {
            WeylType::D(0) => Err(Error::InvalidParameters("D(n) needs n >= 1".into())),
            _ => Ok(self),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            WeylType::A(k) => k,
            WeylType::B(n) => n,
            WeylType::D(1) => 0,
            WeylType::D(n) => n,
        }
    }

    pub fn order(&self) -> BigInt {
        let fact = |n: usize| (1..=n).fold(BigInt::one(), |a, k| a * k);
        match *self {
            WeylType::A(k) => fact(k + 1),
            WeylType::B(n) => fact(n) << n,
            WeylType::D(n) => (fact(n) << n) >> 1,
        }
    }

    /// `Σ_w q^{ℓ(w)}` as a closed product of `q`-integers.
    pub fn poincare(&self) -> LaurentPoly {
        let qm1 = LaurentPoly::from_i64_terms(&[(0, -1), (1, 1)]);
        let frac = |k: i64| {
            LaurentPoly::from_i64_terms(&[(0, -1), (k, 1)]).div_exact(&qm1).expect("q - 1 divides q^k - 1")
        };
        match *self {
            WeylType::A(k) => (1..=k as i64).fold(LaurentPoly::one(), |acc, r| acc * frac(r + 1)),
            WeylType::B(n) => (1..=n as i64).fold(LaurentPoly::one(), |acc, r| acc * frac(2 * r)),
            WeylType::D(n) => (1..n as i64).fold(frac(n as i64), |acc, r| acc * frac(2 * r)),
        }
    }

    pub fn is_semisimple(&self, q0: &Rational) -> bool {
        !q0.is_zero() && !self.poincare().eval_at(q0).expect("polynomial").is_zero()
    }

    /// Single-domain root system with the Dynkin numbering used for the generators.
    pub fn root_system(&self) -> RootSystemData {
        let (ambient, sum_zero) = match *self {
            WeylType::A(k) => (k + 1, true),
            WeylType::B(n) => (n, false),
            WeylType::D(n) => (n, false),
        };
        let rank = self.rank();
        let mut simple: Vec<RootVector> =
            (0..ambient.saturating_sub(1)).map(|i| RootVector::pair(ambient, i, 1, i + 1, -1)).collect();
        let mut positive = Vec::new();
        for i in 0..ambient {
            for j in i + 1..ambient {
                positive.push(RootVector::pair(ambient, i, 1, j, -1));
                if !sum_zero {
                    positive.push(RootVector::pair(ambient, i, 1, j, 1));
                }
            }
        }
        match *self {
            WeylType::A(_) => {}
            WeylType::B(n) => {
                if n > 0 {
                    simple.push(RootVector::unit(n, n - 1, 1));
                    positive.extend((0..n).map(|k| RootVector::unit(n, k, 1)));
                }
            }
            WeylType::D(n) => {
                if n >= 2 {
                    simple.push(RootVector::pair(n, n - 2, 1, n - 1, 1));
                }
            }
        }
        debug_assert_eq!(simple.len(), rank);
        RootSystemData::from_parts(RootSystemParts {
            label: self.to_string(),
            family: None,
            ambient,
            sum_zero,
            domains: vec![Domain::Single],
            action: vec![vec![0]; rank],
            simple: vec![simple],
            positive: vec![positive],
        })
        .expect("classical root systems are well formed")
    }

    pub fn groupoid(&self) -> Groupoid {
        Groupoid::enumerate(Arc::new(self.root_system()), DEFAULT_MAX_ELEMENTS).expect("finite Weyl group")
    }

    /// `Σ_w q^{ℓ(w)}` by enumerating the group.
    pub fn poincare_by_enumeration(&self) -> LaurentPoly {
        let g = self.groupoid();
        LaurentPoly::from_terms((0..g.len()).map(|k| (g.length_of(k) as i64, BigInt::one())))
    }

    /// Coxeter exponents `m_{ij}` of the generators.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let rs = self.root_system();
        let r = self.rank();
        (0..r)
            .map(|i| (0..r).map(|j| if i == j { 1 } else { rs.coxeter_entry(i, j, 0).finite().unwrap() }).collect())
            .collect()
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylType::A(k) => write!(f, "A{}", k),
            WeylType::B(n) => write!(f, "B{}", n),
            WeylType::D(n) => write!(f, "D{}", n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=n.min(max)).rev() {
                cur.push(k);
                rec(n - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Ordered bipartitions of `n`.
pub fn bipartitions(n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for l in Partition::all(k) {
            for m in Partition::all(n - k) {
                out.push((l.clone(), m));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Half {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrrepLabel {
    A(Partition),
    B(Partition, Partition),
    /// Unordered pair; `half` is set exactly when both partitions agree.
    D(Partition, Partition, Option<Half>),
    Generic(usize),
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::A(l) => write!(f, "{}", l),
            IrrepLabel::B(l, m) => write!(f, "({};{})", l, m),
            IrrepLabel::D(l, m, None) => write!(f, "{{{};{}}}", l, m),
            IrrepLabel::D(l, m, Some(h)) => {
                write!(f, "{{{};{}}}{}", l, m, if *h == Half::Plus { "+" } else { "-" })
            }
            IrrepLabel::Generic(k) => write!(f, "#{}", k),
        }
    }
}

/// An irreducible representation, one matrix per generator.
#[derive(Clone, Debug, PartialEq)]
pub struct Irrep {
    pub label: IrrepLabel,
    pub dim: usize,
    pub generators: Vec<Matrix<Rational>>,
}

impl Irrep {
    /// Representing matrix of the product of generators, leftmost first.
    pub fn word_matrix(&self, letters: &[usize]) -> Matrix<Rational> {
        letters.iter().fold(Matrix::identity(self.dim), |acc, &i| acc.mul(&self.generators[i]))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Cell {
    comp: u8,
    row: u16,
    col: u16,
}

/// Standard fillings of the given shapes by `1..n`; entry `k` is the cell of `k + 1`.
fn standard_tableaux(shapes: &[&Partition]) -> Vec<Vec<Cell>> {
    fn rec(shapes: &[&Partition], filled: &mut [Vec<usize>], cur: &mut Vec<Cell>, n: usize, out: &mut Vec<Vec<Cell>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..shapes.len() {
            for r in 0..shapes[c].0.len() {
                let len = filled[c][r];
                if len < shapes[c].0[r] && (r == 0 || filled[c][r - 1] > len) {
                    filled[c][r] += 1;
                    cur.push(Cell { comp: c as u8, row: r as u16, col: len as u16 });
                    rec(shapes, filled, cur, n, out);
                    cur.pop();
                    filled[c][r] -= 1;
                }
            }
        }
    }
    let n: usize = shapes.iter().map(|s| s.size()).sum();
    let mut filled: Vec<Vec<usize>> = shapes.iter().map(|s| vec![0; s.0.len()]).collect();
    let mut out = Vec::new();
    rec(shapes, &mut filled, &mut Vec::new(), n, &mut out);
    out
}

fn q_power(e: i64) -> RationalFunction {
    if e >= 0 {
        RationalFunction::from_poly(LaurentPoly::monomial(e, BigInt::one()))
    } else {
        RationalFunction::new(LaurentPoly::one(), LaurentPoly::monomial(-e, BigInt::one())).unwrap()
    }
}

/// Seminormal matrices of `T_1 .. T_{n-1}` (and of `T_0` when `second` is given)
/// over rational functions in `q`. `second` is the eigenvalue of `T_0` on the first
/// component; the second component carries `-1`.
fn seminormal(shapes: &[&Partition], second: Option<&RationalFunction>) -> (Vec<Matrix<RationalFunction>>, Option<Matrix<RationalFunction>>) {
    let tabs = standard_tableaux(shapes);
    let index: HashMap<Vec<Cell>, usize> = tabs.iter().enumerate().map(|(k, t)| (t.clone(), k)).collect();
    let content = |c: Cell| -> RationalFunction {
        let base = q_power(c.col as i64 - c.row as i64);
        match (second, c.comp) {
            (None, _) => base,
            (Some(big_q), 0) => base.mul_ref(big_q),
            (Some(_), _) => -base,
        }
    };
    let q = RationalFunction::q();
    let qm1 = q.clone() - RationalFunction::one();
    let d = tabs.len();
    let n = tabs.first().map_or(0, |t| t.len());
    let mut gens = Vec::new();
    for k in 0..n.saturating_sub(1) {
        let mut m = Matrix::zeros(d, d);
        for (ti, t) in tabs.iter().enumerate() {
            let (c1, c2) = (t[k], t[k + 1]);
            let (y, x) = (content(c1), content(c2));
            let a_t = qm1.mul_ref(&x).try_div(&(x.clone() - y.clone())).expect("distinct contents");
            m[(ti, ti)] = a_t.clone();
            let mut s = t.clone();
            s.swap(k, k + 1);
            if let Some(&si) = index.get(&s) {
                if c1 < c2 {
                    m[(si, ti)] = RationalFunction::one();
                } else {
                    let a_s = qm1.mul_ref(&y).try_div(&(y.clone() - x.clone())).unwrap();
                    m[(si, ti)] = a_t.mul_ref(&a_s) + q.clone();
                }
            }
        }
        gens.push(m);
    }
    let t0 = second.filter(|_| n > 0).map(|_| {
        let mut m = Matrix::zeros(d, d);
        for (ti, t) in tabs.iter().enumerate() {
            m[(ti, ti)] = content(t[0]);
        }
        m
    });
    (gens, t0)
}

fn eval_all(ms: &[Matrix<RationalFunction>], q0: &Rational) -> Result<Vec<Matrix<Rational>>, Error> {
    ms.iter().map(|m| m.eval_at(q0).map_err(Error::from)).collect()
}

/// Type B matrices in Dynkin order at parameters `(Q, q)`, `Q` given as a rational function.
fn type_b_matrices(l: &Partition, m: &Partition, big_q: &RationalFunction) -> Vec<Matrix<RationalFunction>> {
    let (ts, t0) = seminormal(&[l, m], Some(big_q));
    let n = l.size() + m.size();
    let mut out: Vec<Matrix<RationalFunction>> = (0..n.saturating_sub(1)).map(|g| ts[n - 2 - g].clone()).collect();
    if n > 0 {
        out.push(t0.unwrap());
    }
    out
}

fn d_restriction(l: &Partition, m: &Partition) -> Vec<Matrix<RationalFunction>> {
    let n = l.size() + m.size();
    let (ts, t0) = seminormal(&[l, m], Some(&RationalFunction::one()));
    if n < 2 {
        return Vec::new();
    }
    let t0 = t0.unwrap();
    let u = t0.mul(&ts[0]).mul(&t0);
    let mut out: Vec<Matrix<RationalFunction>> = (0..n - 1).map(|g| ts[n - 2 - g].clone()).collect();
    out.push(u);
    out
}

/// A complete set of pairwise non-equivalent irreducible representations at `q0`.
pub fn irreps(t: WeylType, q0: &Rational) -> Result<Vec<Irrep>, Error> {
    let t = t.validate()?;
    if !t.is_semisimple(q0) {
        return Err(Error::NotSemisimple(crate::scalar::format_rational(q0)));
    }
    let mut out = Vec::new();
    match t {
        WeylType::A(k) => {
            for l in Partition::all(k + 1) {
                let (ts, _) = seminormal(&[&l], None);
                let gens = eval_all(&ts, q0)?;
                let dim = standard_tableaux(&[&l]).len();
                out.push(Irrep { label: IrrepLabel::A(l), dim, generators: gens });
            }
        }
        WeylType::B(n) => {
            for (l, m) in bipartitions(n) {
                let gens = eval_all(&type_b_matrices(&l, &m, &RationalFunction::q()), q0)?;
                let dim = standard_tableaux(&[&l, &m]).len();
                out.push(Irrep { label: IrrepLabel::B(l, m), dim, generators: gens });
            }
        }
        WeylType::D(n) => {
            let all = bipartitions(n);
            for (k, (l, m)) in all.iter().enumerate() {
                let dim = standard_tableaux(&[l, m]).len();
                let gens = eval_all(&d_restriction(l, m), q0)?;
                if l != m {
                    let swapped = all.iter().position(|x| x.0 == *m && x.1 == *l).unwrap();
                    if swapped > k {
                        out.push(Irrep { label: IrrepLabel::D(l.clone(), m.clone(), None), dim, generators: gens });
                    }
                } else {
                    let (a, b) = split_in_two(&gens)?;
                    for (h, g) in [(Half::Plus, a), (Half::Minus, b)] {
                        out.push(Irrep {
                            label: IrrepLabel::D(l.clone(), m.clone(), Some(h)),
                            dim: dim / 2,
                            generators: g,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Basis of the commutant `{X : X G = G X for all G}`.
fn commutant(gens: &[Matrix<Rational>], d: usize) -> Vec<Matrix<Rational>> {
    let unknowns = d * d;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in gens {
        for r in 0..d {
            for c in 0..d {
                // (X G - G X)[r][c] = Σ_k X[r][k] G[k][c] - G[r][k] X[k][c]
                let mut row = vec![Rational::zero(); unknowns];
                for k in 0..d {
                    row[r * d + k] += &g[(k, c)];
                    row[k * d + c] -= &g[(r, k)];
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = if rows.is_empty() { Matrix::zeros(1, unknowns) } else { Matrix::from_rows(rows) };
    sys.nullspace()
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(d).map(|c| c.to_vec()).collect()))
        .collect()
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

/// Restriction of the action to an invariant subspace spanned by the columns of `basis`.
pub fn restrict(gens: &[Matrix<Rational>], basis: &[Vec<Rational>]) -> Result<Vec<Matrix<Rational>>, Error> {
    let d = basis.first().map_or(0, |v| v.len());
    let k = basis.len();
    let mut kmat = Matrix::zeros(d, k);
    for (c, v) in basis.iter().enumerate() {
        for r in 0..d {
            kmat[(r, c)] = v[r].clone();
        }
    }
    gens.iter()
        .map(|g| {
            let mut out = Matrix::zeros(k, k);
            for (c, v) in basis.iter().enumerate() {
                let img = g.mul_vec(v);
                let coeffs = kmat.solve(&img).ok_or_else(|| Error::Inconsistent("subspace is not invariant".into()))?;
                for r in 0..k {
                    out[(r, c)] = coeffs[r].clone();
                }
            }
            Ok(out)
        })
        .collect()
}

/// Splits a module whose endomorphism algebra is `Q × Q` into its two summands,
/// ordered by their trace vectors.
type Halves = (Vec<Matrix<Rational>>, Vec<Matrix<Rational>>);

fn split_in_two(gens: &[Matrix<Rational>]) -> Result<Halves, Error> {
    let d = gens[0].rows();
    let comm = commutant(gens, d);
    if comm.len() != 2 {
        return Err(Error::Inconsistent(format!("commutant has dimension {}", comm.len())));
    }
    let id = Matrix::<Rational>::identity(d);
    let j = comm.iter().find(|m| **m != id.scale(&m[(0, 0)])).unwrap();
    let shift = j.trace() / Rational::from_integer(BigInt::from(d));
    let jp = j.sub(&id.scale(&shift));
    let sq = jp.mul(&jp);
    let c = sq[(0, 0)].clone();
    if sq != id.scale(&c) {
        return Err(Error::Inconsistent("commutant element does not square to a scalar".into()));
    }
    let r = rational_sqrt(&c).ok_or_else(|| Error::Inconsistent("eigenvalues are not rational".into()))?;
    let a = restrict(gens, &jp.sub(&id.scale(&r)).nullspace())?;
    let b = restrict(gens, &jp.add(&id.scale(&r)).nullspace())?;
    let (ta, tb) = (trace_vector(&a, 2), trace_vector(&b, 2));
    Ok(if ta <= tb { (a, b) } else { (b, a) })
}

/// Traces of all products of at most `max_len` generators, identity first.
pub fn trace_vector(gens: &[Matrix<Rational>], max_len: usize) -> Vec<Rational> {
    let d = gens.first().map_or(1, |g| g.rows());
    let mut out = vec![Rational::from_integer(BigInt::from(d))];
    let mut layer = vec![Matrix::<Rational>::identity(d)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for m in &layer {
            for g in gens {
                let p = m.mul(g);
                out.push(p.trace());
                next.push(p);
            }
        }
        layer = next;
    }
    out
}

/// Smallest word length at which all trace vectors differ, if any up to `max_len`.
pub fn separating_length(reps: &[Irrep], max_len: usize) -> Option<usize> {
    (0..=max_len).find(|&l| {
        let tv: Vec<Vec<Rational>> = reps.iter().map(|r| trace_vector(&r.generators, l)).collect();
        (0..tv.len()).all(|i| (i + 1..tv.len()).all(|j| tv[i] != tv[j]))
    })
}

/// Failed relation descriptions for an irrep: quadratic and braid relations.
pub fn verify_irrep(t: WeylType, rep: &Irrep, q0: &Rational) -> Vec<String> {
    let mut out = Vec::new();
    let id = Matrix::<Rational>::identity(rep.dim);
    let cm = t.coxeter_matrix();
    let rs = t.root_system();
    for (i, g) in rep.generators.iter().enumerate() {
        if !g.sub(&id.scale(q0)).mul(&g.add(&id)).is_zero() {
            out.push(format!("quadratic relation fails for generator {} of {}", i + 1, rep.label));
        }
    }
    for (i, row) in cm.iter().enumerate() {
        for (j, &mij) in row.iter().enumerate().skip(i + 1) {
            let m = mij as usize;
            let word = |a, b| -> Vec<usize> {
                alternating(&rs, a, b, 0, m).into_iter().map(|g| if let Gen::T(x, _) = g { x } else { 0 }).collect()
            };
            if rep.word_matrix(&word(i, j)) != rep.word_matrix(&word(j, i)) {
                out.push(format!("braid relation ({},{}) of length {} fails for {}", i + 1, j + 1, m, rep.label));
            }
        }
    }
    out
}

/// Representing matrices of `T_w` along the canonical reduced words of the group.
pub fn character(t: WeylType, rep: &Irrep) -> Vec<Rational> {
    let g = t.groupoid();
    (0..g.len()).map(|k| rep.word_matrix(&g.canonical_word(k).letters).trace()).collect()
}

/// Whether two irreducible representations are equivalent, via a nonzero intertwiner.
pub fn equivalent(a: &[Matrix<Rational>], b: &[Matrix<Rational>]) -> bool {
    let (da, db) = (a.first().map_or(1, |g| g.rows()), b.first().map_or(1, |g| g.rows()));
    if da != db || a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let d = da;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (ga, gb) in a.iter().zip(b) {
        for r in 0..d {
            for c in 0..d {
                // (X ga - gb X)[r][c]
                let mut row = vec![Rational::zero(); d * d];
                for k in 0..d {
                    row[r * d + k] += &ga[(k, c)];
                    row[k * d + c] -= &gb[(r, k)];
                }
                rows.push(row);
            }
        }
    }
    !Matrix::from_rows(rows).nullspace().is_empty()
}

/// Matrices of left multiplication by the generators on the Hecke algebra itself.
pub fn regular_representation(t: WeylType, q0: &Rational) -> Vec<Matrix<Rational>> {
    let h = HeckeAlgebra::new(Arc::new(t.groupoid()), q0.clone());
    (0..t.rank()).map(|i| h.left_matrix(Gen::T(i, 0))).collect()
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub irreps: Vec<Irrep>,
    pub multiplicities: Vec<usize>,
}

const SPLIT_ATTEMPTS: usize = 40;

/// Decomposes a semisimple split module into irreducibles. Eigenspaces of a
/// generic central element give the isotypic components; inside each one a
/// simple submodule is cut out with eigenvectors of commuting elements built
/// from centres of the subalgebras generated by initial or terminal runs of
/// generators.
pub fn split_regular_module(gens: &[Matrix<Rational>], seed: u64) -> Result<Decomposition, Error> {
    let n = gens.first().map_or(1, |g| g.rows());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut irreps = Vec::new();
    let mut multiplicities = Vec::new();
    for comp in isotypic_components(gens, &mut rng)? {
        let mut m = restrict(gens, &comp)?;
        loop {
            let u = m.first().map_or(comp.len(), |g| g.rows());
            if u == 1 || (u * u <= n && algebra_dimension(&m, u * u) == u * u) {
                break;
            }
            let sub = find_submodule(&m, &mut rng)?;
            m = restrict(&m, &sub)?;
        }
        let dim = m.first().map_or(1, |g| g.rows());
        if comp.len() % dim != 0 {
            return Err(Error::Inconsistent("component is not isotypic".into()));
        }
        irreps.push(Irrep { label: IrrepLabel::Generic(irreps.len()), dim, generators: m });
        multiplicities.push(comp.len() / dim);
    }
    Ok(Decomposition { irreps, multiplicities })
}

fn isotypic_components(gens: &[Matrix<Rational>], rng: &mut ChaCha8Rng) -> Result<Vec<Vec<Vec<Rational>>>, Error> {
    let d = gens.first().map_or(1, |g| g.rows());
    if gens.is_empty() {
        return Ok(vec![unit_vectors(d)]);
    }
    let z = centre(gens, d);
    for _ in 0..SPLIT_ATTEMPTS {
        let mut x = Matrix::zeros(d, d);
        for c in &z {
            x = x.add(&c.scale(&random_small(rng)));
        }
        let spaces: Vec<Vec<Vec<Rational>>> = rational_eigenvalues(&x, rng)
            .into_iter()
            .map(|l| x.sub(&Matrix::identity(d).scale(&l)).nullspace())
            .collect();
        if spaces.iter().map(|s| s.len()).sum::<usize>() != d {
            return Err(Error::NotSemisimple("central element is not split diagonalisable".into()));
        }
        if spaces.len() == z.len() {
            return Ok(spaces);
        }
    }
    Err(Error::SplitBudgetExhausted)
}

fn unit_vectors(d: usize) -> Vec<Vec<Rational>> {
    (0..d).map(|i| (0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

/// Dimension of the algebra generated by `gens` (with identity), capped at `cap`.
fn algebra_dimension(gens: &[Matrix<Rational>], cap: usize) -> usize {
    algebra_basis(gens, cap).len()
}

fn algebra_basis(gens: &[Matrix<Rational>], cap: usize) -> Vec<Matrix<Rational>> {
    let d = gens.first().map_or(1, |g| g.rows());
    let mut span = SpanBuilder::new();
    let id = Matrix::<Rational>::identity(d);
    span.insert(id.to_sparse());
    let mut basis = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.mul(&x);
            if span.insert(y.to_sparse()) {
                basis.push(y.clone());
                if basis.len() >= cap {
                    return basis;
                }
                queue.push_back(y);
            }
        }
    }
    basis
}

/// Centre of the algebra generated by `sub`.
fn centre(sub: &[Matrix<Rational>], d: usize) -> Vec<Matrix<Rational>> {
    let basis = algebra_basis(sub, usize::MAX);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in sub {
        let comms: Vec<Matrix<Rational>> = basis.iter().map(|b| b.mul(g).sub(&g.mul(b))).collect();
        for e in 0..d * d {
            let row: Vec<Rational> = comms.iter().map(|c| c.data()[e].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return basis;
    }
    Matrix::from_rows(rows)
        .nullspace()
        .into_iter()
        .map(|c| {
            let mut acc = Matrix::zeros(d, d);
            for (x, b) in c.iter().zip(&basis) {
                if !x.is_zero() {
                    acc = acc.add(&b.scale(x));
                }
            }
            acc
        })
        .collect()
}

fn random_small(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from_integer(BigInt::from(rng.gen_range(-5i64..=5)))
}

fn find_submodule(gens: &[Matrix<Rational>], rng: &mut ChaCha8Rng) -> Result<Vec<Vec<Rational>>, Error> {
    let d = gens[0].rows();
    let r = gens.len();
    // the centres along one chain of nested subalgebras commute with each other
    let mut chains: [Vec<Matrix<Rational>>; 2] = [Vec::new(), Vec::new()];
    for k in 1..=r {
        chains[0].extend(centre(&gens[..k], d));
        chains[1].extend(centre(&gens[r - k..], d));
    }
    for attempt in 0..SPLIT_ATTEMPTS {
        let mut x = Matrix::zeros(d, d);
        for c in &chains[attempt % 2] {
            x = x.add(&c.scale(&random_small(rng)));
        }
        let mut candidates: Vec<Vec<Vec<Rational>>> = Vec::new();
        for lambda in rational_eigenvalues(&x, rng) {
            let kernel = x.sub(&Matrix::identity(d).scale(&lambda)).nullspace();
            if kernel.len() < d {
                candidates.push(kernel);
            }
        }
        candidates.push(unit_vectors(d));
        for kernel in candidates {
            let mut v = vec![Rational::zero(); d];
            for b in &kernel {
                let c = random_small(rng);
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi += &c * bi;
                }
            }
            for start in std::iter::once(v).chain(kernel.iter().cloned()) {
                if start.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let s = spin(gens, &start);
                if !s.is_empty() && s.len() < d {
                    return Ok(s);
                }
            }
        }
    }
    Err(Error::SplitBudgetExhausted)
}

/// Smallest invariant subspace containing `v`.
fn spin(gens: &[Matrix<Rational>], v: &[Rational]) -> Vec<Vec<Rational>> {
    let mut span = SpanBuilder::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    if span.insert(to_sparse(v)) {
        out.push(v.to_vec());
        queue.push_back(v.to_vec());
    }
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.mul_vec(&x);
            if span.insert(to_sparse(&y)) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

/// Rational roots of the minimal polynomials of `x` relative to a few vectors.
fn rational_eigenvalues(x: &Matrix<Rational>, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let d = x.rows();
    let mut out: Vec<Rational> = Vec::new();
    for _ in 0..2 {
        let v: Vec<Rational> = (0..d).map(|_| random_small(rng)).collect();
        for r in rational_roots(&vector_minimal_polynomial(x, &v)) {
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out
}

/// Monic polynomial `p` of least degree with `p(x) v = 0`, lowest coefficient first.
fn vector_minimal_polynomial(x: &Matrix<Rational>, v: &[Rational]) -> Vec<Rational> {
    let d = x.rows();
    let mut krylov = vec![v.to_vec()];
    loop {
        let k = krylov.len();
        let next = x.mul_vec(&krylov[k - 1]);
        let mut sys = Matrix::zeros(d, k);
        for (j, w) in krylov.iter().enumerate() {
            for (e, c) in w.iter().enumerate() {
                sys[(e, j)] = c.clone();
            }
        }
        if let Some(c) = sys.solve(&next) {
            let mut poly: Vec<Rational> = c.into_iter().map(|v| -v).collect();
            poly.push(Rational::one());
            return poly;
        }
        krylov.push(next);
    }
}

/// Minimal polynomial, lowest degree coefficient first, monic.
pub fn minimal_polynomial(x: &Matrix<Rational>) -> Vec<Rational> {
    let d = x.rows();
    let mut powers = vec![Matrix::<Rational>::identity(d)];
    loop {
        let k = powers.len();
        let next = powers[k - 1].mul(x);
        // solve next = Σ c_j powers[j]
        let mut sys = Matrix::zeros(d * d, k);
        for (j, pw) in powers.iter().enumerate() {
            for (e, v) in pw.data().iter().enumerate() {
                sys[(e, j)] = v.clone();
            }
        }
        if let Some(c) = sys.solve(next.data()) {
            let mut poly: Vec<Rational> = c.into_iter().map(|v| -v).collect();
            poly.push(Rational::one());
            return poly;
        }
        powers.push(next);
    }
}

fn eval_poly(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let lead = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let c = r.last().unwrap() / &lead;
        let off = r.len() - b.len();
        for (j, bj) in b.iter().enumerate() {
            r[off + j] -= &c * bj;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn sturm_sequence(p: &[Rational]) -> Vec<Vec<Rational>> {
    let deriv: Vec<Rational> =
        p.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(BigInt::from(k))).collect();
    let mut seq = vec![p.to_vec(), deriv];
    while seq.last().unwrap().len() > 1 {
        let k = seq.len();
        let r = poly_rem(&seq[k - 2], &seq[k - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq
}

fn sign_changes(seq: &[Vec<Rational>], x: &Rational) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| eval_poly(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| if v.is_positive() { 1 } else { -1 })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Rational roots via the monic integer transform `g(y) = a^{n-1} f(y / a)` and
/// Sturm bisection between half-integers.
pub fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    let mut p = p.to_vec();
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    // strip zero roots
    let zeros = p.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(Rational::zero());
        p.drain(..zeros);
    }
    if p.len() <= 1 {
        return roots;
    }
    let l = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let deg = ints.len() - 1;
    let a = ints[deg].clone();
    // g(y) = Σ c_k a^{deg-1-k} y^k for k < deg, and y^deg
    let g: Vec<Rational> = (0..=deg)
        .map(|k| {
            if k == deg {
                Rational::one()
            } else {
                Rational::from_integer(&ints[k] * num_traits::pow(a.clone(), deg - 1 - k))
            }
        })
        .collect();
    let bound = g.iter().map(|c| c.abs().to_integer()).max().unwrap() + BigInt::one();
    let seq = sturm_sequence(&g);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        // integers in (lo - 1/2, hi + 1/2)
        let lo_r = Rational::from_integer(lo.clone()) - &half;
        let hi_r = Rational::from_integer(hi.clone()) + &half;
        let count = sign_changes(&seq, &lo_r) as i64 - sign_changes(&seq, &hi_r) as i64;
        if count <= 0 {
            continue;
        }
        if lo == hi {
            let y = Rational::from_integer(lo.clone());
            if eval_poly(&g, &y).is_zero() {
                roots.push(y / Rational::from_integer(a.clone()));
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid + 1, hi));
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn poincare_examples() {
        // (1 + q)(1 + q + q^2)
        assert_eq!(WeylType::A(2).poincare(), LaurentPoly::from_i64_terms(&[(0, 1), (1, 2), (2, 2), (3, 1)]));
        // (1 + q)^2 (1 + q^2)
        assert_eq!(WeylType::B(2).poincare(), LaurentPoly::from_i64_terms(&[(0, 1), (1, 2), (2, 2), (3, 2), (4, 1)]));
        assert_eq!(WeylType::D(1).poincare(), LaurentPoly::one());
        for t in [WeylType::A(3), WeylType::B(3), WeylType::D(3), WeylType::D(4), WeylType::B(0), WeylType::A(0)] {
            assert_eq!(t.poincare(), t.poincare_by_enumeration(), "{}", t);
        }
    }

    #[test]
    fn semisimplicity() {
        assert!(WeylType::A(2).is_semisimple(&rat(2, 1)));
        assert!(!WeylType::A(2).is_semisimple(&rat(-1, 1)));
        assert!(!WeylType::B(2).is_semisimple(&rat(0, 1)));
    }

    #[test]
    fn s2_irreps() {
        let r = irreps(WeylType::A(1), &rat(3, 1)).unwrap();
        let vals: Vec<Rational> = r.iter().map(|x| x.generators[0][(0, 0)].clone()).collect();
        assert_eq!(vals, vec![rat(3, 1), rat(-1, 1)]);
    }

    #[test]
    fn dimension_sums() {
        for t in [WeylType::A(2), WeylType::A(3), WeylType::B(2), WeylType::B(3), WeylType::D(2), WeylType::D(3), WeylType::D(4)] {
            let r = irreps(t, &rat(2, 1)).unwrap();
            let s: usize = r.iter().map(|x| x.dim * x.dim).sum();
            assert_eq!(BigInt::from(s), t.order(), "{}", t);
            for rep in &r {
                assert!(verify_irrep(t, rep, &rat(2, 1)).is_empty(), "{:?}", verify_irrep(t, rep, &rat(2, 1)));
            }
        }
    }

    #[test]
    fn q_equal_one_is_allowed() {
        let r = irreps(WeylType::B(2), &rat(1, 1)).unwrap();
        for rep in &r {
            assert!(verify_irrep(WeylType::B(2), rep, &rat(1, 1)).is_empty());
        }
    }

    #[test]
    fn trivial_types() {
        for t in [WeylType::A(0), WeylType::B(0), WeylType::D(1)] {
            let r = irreps(t, &rat(2, 1)).unwrap();
            assert_eq!(r.len(), 1);
            assert_eq!(r[0].dim, 1);
            assert!(r[0].generators.is_empty());
        }
        let d2 = irreps(WeylType::D(2), &rat(2, 1)).unwrap();
        assert_eq!(d2.len(), 4);
        assert!(d2.iter().all(|r| r.dim == 1));
    }

    #[test]
    fn rational_roots_found() {
        // (x - 1/2)(x + 3)(x - 2) = x^3 + x^2/2 - 13x/2 + 3
        let p = vec![rat(3, 1), rat(-13, 2), rat(1, 2), rat(1, 1)];
        assert_eq!(rational_roots(&p), vec![rat(-3, 1), rat(1, 2), rat(2, 1)]);
        // x^2 - 2 has no rational roots
        assert!(rational_roots(&[rat(-2, 1), rat(0, 1), rat(1, 1)]).is_empty());
        assert_eq!(rational_roots(&[rat(0, 1), rat(1, 1)]), vec![rat(0, 1)]);
    }

    #[test]
    fn split_s3_regular_module() {
        let gens = regular_representation(WeylType::A(2), &rat(2, 1));
        let dec = split_regular_module(&gens, 7).unwrap();
        let mut pairs: Vec<(usize, usize)> = dec.irreps.iter().map(|r| r.dim).zip(dec.multiplicities.iter().copied()).collect();
        pairs.sort();
        assert_eq!(pairs, vec![(1, 1), (1, 1), (2, 2)]);
    }

    #[test]
    fn trivial_algebra_splits_to_one() {
        let dec = split_regular_module(&[], 1).unwrap();
        assert_eq!(dec.irreps.len(), 1);
        assert_eq!(dec.irreps[0].dim, 1);
    }

    #[test]
    fn oracle_agrees_with_seminormal() {
        let q0 = rat(3, 1);
        for t in [WeylType::A(2), WeylType::B(2), WeylType::D(3)] {
            let dec = split_regular_module(&regular_representation(t, &q0), 11).unwrap();
            let reps = irreps(t, &q0).unwrap();
            assert_eq!(dec.irreps.len(), reps.len(), "{}", t);
            for (r, m) in dec.irreps.iter().zip(&dec.multiplicities) {
                assert_eq!(r.dim, *m);
                assert_eq!(reps.iter().filter(|s| equivalent(&s.generators, &r.generators)).count(), 1);
            }
        }
    }
}
