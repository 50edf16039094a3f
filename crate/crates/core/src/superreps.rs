//! Box-tensor representations of the super Hecke algebras and the check that
//! their direct sum is an isomorphism onto a product of matrix algebras.
//!
//! The even block generators act through irreducible representations of the
//! classical Hecke algebras of the even part; isotropic generators move blocks.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::domains::{tau_minus, tau_plus, CdTag, Family};
use crate::groupoid::{Groupoid, DEFAULT_MAX_ELEMENTS};
use crate::linalg::{Matrix, SpanBuilder};
use crate::relations::{failing, family_relations, presentation_relations, Gen, RelationModel};
use crate::rootsys::{build_root_system, RootSystemData};
use crate::weylreps::{irreps, Irrep, IrrepLabel, WeylType};
use crate::{Error, LaurentPoly, Rational, Specialize};

/// Classical Weyl types of the two factors of the even part.
pub fn even_part(family: Family) -> (WeylType, WeylType) {
    match family {
        Family::Gl { m, n } => (WeylType::A(m), WeylType::A(n)),
        Family::OspOdd { m, n } => (WeylType::B(m), WeylType::B(n)),
        Family::OspEven { m, n } => (WeylType::D(m), WeylType::B(n)),
    }
}

/// Closed formula for the dimension of the Hecke algebra.
pub fn dimension_formula(family: Family) -> BigInt {
    let fact = |n: usize| (1..=n).fold(BigInt::one(), |a, k| a * k);
    match family {
        Family::Gl { m, n } => {
            let f = fact(m + n + 2);
            &f * &f / (fact(m + 1) * fact(n + 1))
        }
        Family::OspOdd { m, n } => {
            let f = fact(m + n);
            ((&f * &f) << (m + n)) / (fact(m) * fact(n))
        }
        Family::OspEven { m, n } => {
            let f = fact(m + n - 1) * BigInt::from(m + 2 * n);
            ((&f * &f) << (m + n - 1)) / (fact(m) * fact(n))
        }
    }
}

/// Matrices of all `E_a` and `T_{i,a}` on one space.
#[derive(Clone, Debug)]
pub struct RepMatrices {
    pub q0: Rational,
    pub dim: usize,
    pub e: Vec<Matrix<Rational>>,
    /// Indexed `[i][a]`.
    pub t: Vec<Vec<Matrix<Rational>>>,
}

impl RepMatrices {
    pub fn gen(&self, g: Gen) -> &Matrix<Rational> {
        match g {
            Gen::E(a) => &self.e[a],
            Gen::T(i, a) => &self.t[i][a],
        }
    }

    /// Image of the basis element attached to the `k`-th groupoid element.
    pub fn basis_image(&self, g: &Groupoid, k: usize) -> Matrix<Rational> {
        let rs = g.root_system();
        let w = g.canonical_word(k);
        let mut m = self.e[w.base].clone();
        let mut d = w.base;
        for &i in w.letters.iter().rev() {
            m = self.t[i][d].mul(&m);
            d = rs.act(i, d);
        }
        m
    }

    fn generators(&self) -> impl Iterator<Item = &Matrix<Rational>> {
        self.e.iter().chain(self.t.iter().flatten())
    }

    /// Dimension of the span of all products of generator images.
    pub fn image_rank(&self) -> usize {
        let mut span = SpanBuilder::new();
        let mut queue: Vec<Matrix<Rational>> = Vec::new();
        for e in &self.e {
            if span.insert(e.to_sparse()) {
                queue.push(e.clone());
            }
        }
        let gens: Vec<&Matrix<Rational>> = self.generators().collect();
        while let Some(x) = queue.pop() {
            for g in &gens {
                let y = g.mul(&x);
                if span.insert(y.to_sparse()) {
                    queue.push(y);
                }
            }
        }
        span.rank()
    }

    pub fn relation_failures(&self, rs: &RootSystemData) -> (usize, Vec<String>) {
        let mut rels = presentation_relations(rs);
        rels.extend(family_relations(rs));
        let f = failing(self, &rels).into_iter().map(|r| r.to_string()).collect();
        (rels.len(), f)
    }
}

impl RelationModel for RepMatrices {
    type Value = Matrix<Rational>;

    fn zero(&self) -> Matrix<Rational> {
        Matrix::zeros(self.dim, self.dim)
    }

    fn one(&self) -> Matrix<Rational> {
        Matrix::identity(self.dim)
    }

    fn left_gen(&self, g: Gen, x: &Matrix<Rational>) -> Matrix<Rational> {
        self.gen(g).mul(x)
    }

    fn add_scaled(&self, acc: &mut Matrix<Rational>, c: &LaurentPoly, x: &Matrix<Rational>) {
        let c = c.eval_at(&self.q0).expect("relation coefficients are polynomials in q");
        *acc = acc.add(&x.scale(&c));
    }

    fn equal(&self, x: &Matrix<Rational>, y: &Matrix<Rational>) -> bool {
        x == y
    }
}

/// `l ⊠ r` on the domain-indexed copies of `V ⊗ W`.
#[derive(Clone, Debug)]
pub struct BlockRep {
    pub family: Family,
    pub left: IrrepLabel,
    pub right: IrrepLabel,
    /// `dim V · dim W`.
    pub block_dim: usize,
    pub matrices: RepMatrices,
}

/// Which operator a generator applies at a domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Action {
    Transport(usize),
    Left(usize),
    Right(usize),
}

fn action_table(family: Family, rs: &RootSystemData) -> Result<Vec<Vec<Action>>, Error> {
    let l = rs.rank();
    let (m, n) = (family.m(), family.n());
    let mut out = vec![Vec::with_capacity(rs.num_domains()); l];
    for a in 0..rs.num_domains() {
        let d = rs.domain(a);
        let p = d.parities();
        let tp = tau_plus(family, d)?.inverse();
        let tm = tau_minus(family, d)?.inverse();
        for (i, row) in out.iter_mut().enumerate() {
            let b = rs.act(i, a);
            let act = if b != a {
                Action::Transport(b)
            } else {
                let last = i + 1 == l;
                match family {
                    Family::Gl { .. } => {
                        if p[i] == 0 {
                            Action::Left(tp.apply(i))
                        } else {
                            Action::Right(tm.apply(i))
                        }
                    }
                    Family::OspOdd { .. } => match (last, p[i]) {
                        (false, 0) => Action::Left(tp.apply(i)),
                        (false, _) => Action::Right(tm.apply(i)),
                        (true, 0) => Action::Left(m - 1),
                        (true, _) => Action::Right(n - 1),
                    },
                    Family::OspEven { .. } => {
                        let tag = d.tag().expect("tagged domain");
                        if i + 2 < l || (i + 2 == l && p[i] == 0 && p[i + 1] == 0) {
                            if p[i] == 0 {
                                // reaching C- from the D domains negates the last even
                                // coordinate, so the even factor is seen through the
                                // diagram automorphism of D(m)
                                let k = tp.apply(i);
                                match tag {
                                    CdTag::CMinus if m >= 2 && k == m - 2 => Action::Left(m - 1),
                                    _ => Action::Left(k),
                                }
                            } else {
                                Action::Right(tm.apply(i))
                            }
                        } else if last && p[i] == 0 {
                            Action::Left(m - 1)
                        } else {
                            let both = p[l - 2] == 1 && p[l - 1] == 1;
                            match (last, tag) {
                                (false, CdTag::CPlus) if both => Action::Right(n - 2),
                                (false, CdTag::CMinus) => Action::Right(n - 1),
                                (true, CdTag::CPlus) => Action::Right(n - 1),
                                (true, CdTag::CMinus) if both => Action::Right(n - 2),
                                _ => {
                                    return Err(Error::Inconsistent(format!(
                                        "no box action for generator {} at {}",
                                        i + 1,
                                        d
                                    )))
                                }
                            }
                        }
                    }
                }
            };
            row.push(act);
        }
    }
    Ok(out)
}

/// Builds `l ⊠ r` for irreps of the two even factors of `family`.
pub fn box_tensor(family: Family, rs: &RootSystemData, l: &Irrep, r: &Irrep, q0: &Rational) -> Result<BlockRep, Error> {
    let (lt, rt) = even_part(family);
    if l.generators.len() != lt.rank() || r.generators.len() != rt.rank() {
        return Err(Error::InvalidParameters(format!(
            "factor ranks {} and {} do not match {}",
            l.generators.len(),
            r.generators.len(),
            family
        )));
    }
    let table = action_table(family, rs)?;
    let bd = l.dim * r.dim;
    let na = rs.num_domains();
    let dim = na * bd;
    let id_v = Matrix::<Rational>::identity(l.dim);
    let id_w = Matrix::<Rational>::identity(r.dim);
    let id_b = Matrix::<Rational>::identity(bd);
    let left: Vec<Matrix<Rational>> = l.generators.iter().map(|g| g.kron(&id_w)).collect();
    let right: Vec<Matrix<Rational>> = r.generators.iter().map(|g| id_v.kron(g)).collect();
    let e = (0..na)
        .map(|a| {
            let mut m = Matrix::zeros(dim, dim);
            m.set_block(a * bd, a * bd, &id_b);
            m
        })
        .collect();
    let t = table
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(a, act)| {
                    let mut m = Matrix::zeros(dim, dim);
                    match *act {
                        Action::Transport(b) => m.set_block(b * bd, a * bd, &id_b),
                        Action::Left(k) => m.set_block(a * bd, a * bd, &left[k]),
                        Action::Right(k) => m.set_block(a * bd, a * bd, &right[k]),
                    }
                    m
                })
                .collect()
        })
        .collect();
    Ok(BlockRep {
        family,
        left: l.label.clone(),
        right: r.label.clone(),
        block_dim: bd,
        matrices: RepMatrices { q0: q0.clone(), dim, e, t },
    })
}

pub fn box_a(m: usize, n: usize, l: &Irrep, r: &Irrep, q0: &Rational) -> Result<BlockRep, Error> {
    let f = Family::gl(m, n)?;
    box_tensor(f, &build_root_system(f)?, l, r, q0)
}

pub fn box_b(m: usize, n: usize, l: &Irrep, r: &Irrep, q0: &Rational) -> Result<BlockRep, Error> {
    let f = Family::osp_odd(m, n)?;
    box_tensor(f, &build_root_system(f)?, l, r, q0)
}

pub fn box_cd(m: usize, n: usize, l: &Irrep, r: &Irrep, q0: &Rational) -> Result<BlockRep, Error> {
    let f = Family::osp_even(m, n)?;
    box_tensor(f, &build_root_system(f)?, l, r, q0)
}

fn check_semisimple(family: Family, q0: &Rational) -> Result<(WeylType, WeylType), Error> {
    let (lt, rt) = even_part(family);
    if !lt.is_semisimple(q0) || !rt.is_semisimple(q0) {
        return Err(Error::NotSemisimple(format!("{} at q = {}", family, crate::scalar::format_rational(q0))));
    }
    Ok((lt, rt))
}

/// All `l ⊠ r` over pairs of irreps, left label slow.
pub fn all_box_reps(family: Family, rs: &RootSystemData, q0: &Rational) -> Result<Vec<BlockRep>, Error> {
    let (lt, rt) = check_semisimple(family, q0)?;
    let li = irreps(lt, q0)?;
    let ri = irreps(rt, q0)?;
    let pairs: Vec<(&Irrep, &Irrep)> = li.iter().flat_map(|l| ri.iter().map(move |r| (l, r))).collect();
    pairs.par_iter().map(|(l, r)| box_tensor(family, rs, l, r, q0)).collect()
}

/// Block diagonal sum of all box-tensor representations.
pub fn big_map(family: Family, q0: &Rational) -> Result<(Vec<BlockRep>, RepMatrices), Error> {
    let rs = build_root_system(family)?;
    let reps = all_box_reps(family, &rs, q0)?;
    Ok((reps.clone(), direct_sum(&reps, q0)))
}

pub fn direct_sum(reps: &[BlockRep], q0: &Rational) -> RepMatrices {
    let dim: usize = reps.iter().map(|r| r.matrices.dim).sum();
    let na = reps.first().map_or(0, |r| r.matrices.e.len());
    let rank = reps.first().map_or(0, |r| r.matrices.t.len());
    let sum = |pick: &dyn Fn(&RepMatrices) -> &Matrix<Rational>| {
        let mut m = Matrix::zeros(dim, dim);
        let mut off = 0;
        for r in reps {
            m.set_block(off, off, pick(&r.matrices));
            off += r.matrices.dim;
        }
        m
    };
    RepMatrices {
        q0: q0.clone(),
        dim,
        e: (0..na).map(|a| sum(&|r| &r.e[a])).collect(),
        t: (0..rank).map(|i| (0..na).map(|a| sum(&|r| &r.t[i][a])).collect()).collect(),
    }
}

#[derive(Clone, Debug)]
pub struct SummandReport {
    pub left: IrrepLabel,
    pub right: IrrepLabel,
    pub dim: usize,
    /// Rank of the image algebra of this summand; full means `dim²`.
    pub image_rank: usize,
    pub relation_failures: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct IsomorphismReport {
    pub family: Family,
    pub q0: Rational,
    pub relations_checked: usize,
    pub summands: Vec<SummandReport>,
    /// `|W \ {0}|` from enumeration.
    pub algebra_dim: usize,
    pub formula: BigInt,
    /// `Σ (|A| · d_λ · d_μ)²`.
    pub expected_rank: usize,
    pub image_rank: usize,
    /// Rank of the images of the basis elements.
    pub injectivity_rank: usize,
    pub traces_distinct: bool,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        BigInt::from(self.algebra_dim) == self.formula
            && self.expected_rank == self.algebra_dim
            && self.image_rank == self.algebra_dim
            && self.injectivity_rank == self.algebra_dim
            && self.traces_distinct
            && self.summands.iter().all(|s| s.relation_failures.is_empty() && s.image_rank == s.dim * s.dim)
    }

    /// First failed check, if any.
    pub fn witness(&self) -> Option<String> {
        if let Some(s) = self.summands.iter().find(|s| !s.relation_failures.is_empty()) {
            return Some(format!("{} ⊠ {}: relation {} fails", s.left, s.right, s.relation_failures[0]));
        }
        if let Some(s) = self.summands.iter().find(|s| s.image_rank != s.dim * s.dim) {
            return Some(format!("{} ⊠ {}: image rank {} < {}", s.left, s.right, s.image_rank, s.dim * s.dim));
        }
        if BigInt::from(self.algebra_dim) != self.formula {
            return Some(format!("dimension {} differs from formula {}", self.algebra_dim, self.formula));
        }
        if self.image_rank != self.algebra_dim || self.expected_rank != self.algebra_dim {
            return Some(format!(
                "image rank {} and block count {} against dimension {}",
                self.image_rank, self.expected_rank, self.algebra_dim
            ));
        }
        if self.injectivity_rank != self.algebra_dim {
            return Some(format!("basis images have rank {} < {}", self.injectivity_rank, self.algebra_dim));
        }
        if !self.traces_distinct {
            return Some("two summands have equal trace vectors".into());
        }
        None
    }
}

pub fn verify_isomorphism(family: Family, q0: &Rational) -> Result<IsomorphismReport, Error> {
    let rs = Arc::new(build_root_system(family)?);
    let g = Groupoid::enumerate(rs.clone(), DEFAULT_MAX_ELEMENTS)?;
    let reps = all_box_reps(family, &rs, q0)?;
    let summands: Vec<(SummandReport, Vec<Rational>, usize)> = reps
        .par_iter()
        .map(|r| {
            let (checked, f) = r.matrices.relation_failures(&rs);
            let traces = (0..g.len()).map(|k| r.matrices.basis_image(&g, k).trace()).collect();
            let rep = SummandReport {
                left: r.left.clone(),
                right: r.right.clone(),
                dim: r.matrices.dim,
                image_rank: r.matrices.image_rank(),
                relation_failures: f,
            };
            (rep, traces, checked)
        })
        .collect();
    let relations_checked = summands.first().map_or(0, |s| s.2);
    let traces_distinct = (0..summands.len()).all(|i| (i + 1..summands.len()).all(|j| summands[i].1 != summands[j].1));
    let sum = direct_sum(&reps, q0);
    let mut span = SpanBuilder::new();
    for k in 0..g.len() {
        span.insert(sum.basis_image(&g, k).to_sparse());
    }
    Ok(IsomorphismReport {
        family,
        q0: q0.clone(),
        relations_checked,
        expected_rank: summands.iter().map(|s| s.0.dim * s.0.dim).sum(),
        summands: summands.into_iter().map(|s| s.0).collect(),
        algebra_dim: g.len(),
        formula: dimension_formula(family),
        image_rank: sum.image_rank(),
        injectivity_rank: span.rank(),
        traces_distinct,
    })
}

/// `|W \ {0}|` by enumeration.
pub fn enumerated_dimension(family: Family) -> Result<usize, Error> {
    let rs = Arc::new(build_root_system(family)?);
    Ok(Groupoid::enumerate(rs, DEFAULT_MAX_ELEMENTS)?.len())
}

/// Trivial representation of a classical Hecke algebra: every generator acts by `q0`.
pub fn trivial_irrep(t: WeylType, q0: &Rational) -> Irrep {
    Irrep {
        label: IrrepLabel::Generic(0),
        dim: 1,
        generators: (0..t.rank()).map(|_| Matrix::scalar(1, q0)).collect(),
    }
}

/// Whether a matrix is zero outside the given diagonal block.
pub fn supported_in_block(m: &Matrix<Rational>, start: usize, size: usize) -> bool {
    (0..m.rows()).all(|r| {
        (0..m.cols()).all(|c| {
            let inside = (start..start + size).contains(&r) && (start..start + size).contains(&c);
            inside || m[(r, c)].is_zero()
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn formulas() {
        let cases = [
            (Family::Gl { m: 1, n: 1 }, 144),
            (Family::Gl { m: 2, n: 1 }, 1200),
            (Family::OspOdd { m: 1, n: 1 }, 16),
            (Family::OspOdd { m: 1, n: 2 }, 144),
            (Family::OspOdd { m: 0, n: 2 }, 8),
            (Family::OspEven { m: 1, n: 1 }, 18),
            (Family::OspEven { m: 2, n: 1 }, 128),
            (Family::OspEven { m: 1, n: 2 }, 200),
        ];
        for (f, d) in cases {
            assert_eq!(dimension_formula(f), BigInt::from(d), "{}", f);
        }
    }

    #[test]
    fn trivial_box_has_one_dim_blocks() {
        let q0 = rat(2, 1);
        let l = trivial_irrep(WeylType::A(1), &q0);
        let r = trivial_irrep(WeylType::A(1), &q0);
        let b = box_a(1, 1, &l, &r, &q0).unwrap();
        assert_eq!(b.block_dim, 1);
        assert_eq!(b.matrices.dim, 6);
        let rs = build_root_system(Family::Gl { m: 1, n: 1 }).unwrap();
        assert!(b.matrices.relation_failures(&rs).1.is_empty());
    }

    #[test]
    fn rank_mismatch_rejected() {
        let q0 = rat(2, 1);
        let l = trivial_irrep(WeylType::A(2), &q0);
        let r = trivial_irrep(WeylType::A(1), &q0);
        assert!(box_a(1, 1, &l, &r, &q0).is_err());
    }

    #[test]
    fn summand_counts() {
        let q0 = rat(2, 1);
        let (reps, sum) = big_map(Family::Gl { m: 1, n: 1 }, &q0).unwrap();
        assert_eq!(reps.len(), 4);
        assert!(reps.iter().all(|r| r.matrices.dim == 6));
        assert_eq!(sum.dim, 24);
        let (reps, _) = big_map(Family::OspOdd { m: 1, n: 1 }, &q0).unwrap();
        assert_eq!(reps.len(), 4);
        assert!(reps.iter().all(|r| r.matrices.dim == 2));
        let (reps, _) = big_map(Family::OspEven { m: 2, n: 1 }, &q0).unwrap();
        assert_eq!(reps.len(), 8);
        assert!(reps.iter().all(|r| r.matrices.dim == 4));
    }

    #[test]
    fn isomorphism_small() {
        for f in [Family::Gl { m: 1, n: 1 }, Family::OspOdd { m: 1, n: 1 }, Family::OspEven { m: 1, n: 1 }] {
            let r = verify_isomorphism(f, &rat(2, 1)).unwrap();
            assert!(r.passed(), "{}: {:?}", f, r.witness());
        }
    }

    #[test]
    fn osp_4_2_needs_twist_at_c_minus() {
        // the split halves of the D(2) irrep ((1),(1)) tell T_{m-1} and T_m apart
        let f = Family::OspEven { m: 2, n: 1 };
        let r = verify_isomorphism(f, &rat(2, 1)).unwrap();
        assert!(r.passed(), "{:?}", r.witness());
        let rs = build_root_system(f).unwrap();
        let table = action_table(f, &rs).unwrap();
        let cm = (0..rs.num_domains()).find(|&a| rs.domain(a).to_string() == "(0,0,1)^C-").unwrap();
        assert_eq!(table[0][cm], Action::Left(1));
    }

    #[test]
    fn non_semisimple_rejected() {
        assert!(matches!(big_map(Family::Gl { m: 1, n: 1 }, &rat(-1, 1)), Err(Error::NotSemisimple(_))));
    }
}
