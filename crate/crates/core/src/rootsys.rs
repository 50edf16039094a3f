//! Multi-domain root systems: simple and positive roots per domain, reflections
//! as signed permutations of the coordinates, Coxeter entries and an axiom checker.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::domains::{act, enumerate_domains, CdTag, Domain, Family};
use crate::linalg::Matrix;
use crate::{Error, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<i32>);

impl RootVector {
    pub fn zero(dim: usize) -> Self {
        RootVector(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize, c: i32) -> Self {
        let mut v = vec![0; dim];
        v[i] = c;
        RootVector(v)
    }

    /// `c_i ε_i + c_j ε_j`.
    pub fn pair(dim: usize, i: usize, ci: i32, j: usize, cj: i32) -> Self {
        let mut v = vec![0; dim];
        v[i] += ci;
        v[j] += cj;
        RootVector(v)
    }

    pub fn neg(&self) -> Self {
        RootVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn add_scaled(&self, c: i32, o: &RootVector) -> Self {
        RootVector(self.0.iter().zip(&o.0).map(|(a, b)| a + c * b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn dot(&self, o: &RootVector) -> i64 {
        self.0.iter().zip(&o.0).map(|(&a, &b)| a as i64 * b as i64).sum()
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{}{}e{}", sign, mag, k + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Linear map sending `ε_j` to `sign_j ε_{image_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    // sign * (image + 1) for each source coordinate
    entries: Vec<i16>,
}

impl SignedPermutation {
    pub fn identity(dim: usize) -> Self {
        SignedPermutation { entries: (1..=dim as i16).collect() }
    }

    pub fn from_pairs(pairs: &[(usize, i8)]) -> Self {
        SignedPermutation { entries: pairs.iter().map(|&(img, s)| s as i16 * (img as i16 + 1)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn image(&self, j: usize) -> (usize, i8) {
        let e = self.entries[j];
        ((e.unsigned_abs() - 1) as usize, e.signum() as i8)
    }

    pub fn pairs(&self) -> Vec<(usize, i8)> {
        (0..self.dim()).map(|j| self.image(j)).collect()
    }

    pub fn apply(&self, v: &RootVector) -> RootVector {
        let mut out = vec![0; v.0.len()];
        for (j, &x) in v.0.iter().enumerate() {
            if x != 0 {
                let (img, s) = self.image(j);
                out[img] += s as i32 * x;
            }
        }
        RootVector(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> Self {
        SignedPermutation {
            entries: (0..other.dim())
                .map(|j| {
                    let (i1, s1) = other.image(j);
                    let (i2, s2) = self.image(i1);
                    (s1 * s2) as i16 * (i2 as i16 + 1)
                })
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut entries = vec![0i16; self.dim()];
        for j in 0..self.dim() {
            let (img, s) = self.image(j);
            entries[img] = s as i16 * (j as i16 + 1);
        }
        SignedPermutation { entries }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(j, &e)| e == j as i16 + 1)
    }

    pub fn all_signs_positive(&self) -> bool {
        self.entries.iter().all(|&e| e > 0)
    }

    /// Orthogonal reflection in `x`, when it permutes the coordinates up to sign.
    pub fn reflection(x: &RootVector) -> Option<Self> {
        let xx = x.dot(x);
        if xx == 0 {
            return None;
        }
        let dim = x.0.len();
        let mut entries = Vec::with_capacity(dim);
        for j in 0..dim {
            // σ(ε_j) = ε_j - (2 x_j / (x·x)) x
            let mut img = vec![Rational::zero(); dim];
            img[j] = Rational::one();
            let f = Rational::new((2 * x.0[j] as i64).into(), xx.into());
            for (k, &xk) in x.0.iter().enumerate() {
                img[k] -= &f * Rational::from_integer((xk as i64).into());
            }
            let nz: Vec<usize> = (0..dim).filter(|&k| !img[k].is_zero()).collect();
            if nz.len() != 1 || !img[nz[0]].abs().is_one() {
                return None;
            }
            let s: i16 = if img[nz[0]].is_positive() { 1 } else { -1 };
            entries.push(s * (nz[0] as i16 + 1));
        }
        let p = SignedPermutation { entries };
        let mut seen = vec![false; dim];
        for j in 0..dim {
            let (img, _) = p.image(j);
            if seen[img] {
                return None;
            }
            seen[img] = true;
        }
        Some(p)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterEntry {
    Finite(u32),
    Infinite,
}

impl CoxeterEntry {
    pub fn finite(self) -> Option<u32> {
        match self {
            CoxeterEntry::Finite(k) => Some(k),
            CoxeterEntry::Infinite => None,
        }
    }
}

/// All data of a finite multi-domain root system, indexed by domain position and
/// 0-based generator index.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    label: String,
    family: Option<Family>,
    ambient: usize,
    sum_zero: bool,
    domains: Vec<Domain>,
    domain_index: HashMap<Domain, usize>,
    action: Vec<Vec<usize>>,
    simple: Vec<Vec<RootVector>>,
    positive: Vec<Vec<RootVector>>,
    positive_set: Vec<HashSet<RootVector>>,
    reflections: Vec<Vec<SignedPermutation>>,
    // coordinates of positive roots in the simple basis of each domain
    coords: Vec<Vec<Option<Vec<Rational>>>>,
}

/// Raw pieces from which a [`RootSystemData`] is assembled.
#[derive(Clone, Debug)]
pub struct RootSystemParts {
    pub label: String,
    pub family: Option<Family>,
    pub ambient: usize,
    /// Whether `V₀` is the coordinate-sum-zero hyperplane.
    pub sum_zero: bool,
    pub domains: Vec<Domain>,
    /// `action[i][a]` is the index of `i ▷ a`.
    pub action: Vec<Vec<usize>>,
    /// `simple[a][i] = α_{i,a}`.
    pub simple: Vec<Vec<RootVector>>,
    pub positive: Vec<Vec<RootVector>>,
}

impl RootSystemData {
    pub fn from_parts(p: RootSystemParts) -> Result<Self, Error> {
        let n_dom = p.domains.len();
        let rank = p.action.len();
        if n_dom == 0
            || p.simple.len() != n_dom
            || p.positive.len() != n_dom
            || p.simple.iter().any(|s| s.len() != rank)
            || p.action.iter().any(|row| row.len() != n_dom || row.iter().any(|&b| b >= n_dom))
        {
            return Err(Error::InvalidParameters("inconsistent root system data".into()));
        }
        let mut reflections = Vec::with_capacity(n_dom);
        for (a, roots) in p.simple.iter().enumerate() {
            let mut row = Vec::with_capacity(rank);
            for (i, x) in roots.iter().enumerate() {
                if x.0.len() != p.ambient {
                    return Err(Error::InvalidParameters(format!("root {} has wrong length", x)));
                }
                match SignedPermutation::reflection(x) {
                    Some(s) => row.push(s),
                    None => {
                        return Err(Error::InvalidParameters(format!(
                            "reflection in simple root {} (generator {}, domain {}) is not a signed permutation",
                            x,
                            i + 1,
                            p.domains[a]
                        )))
                    }
                }
            }
            reflections.push(row);
        }
        let domain_index = p.domains.iter().enumerate().map(|(k, d)| (d.clone(), k)).collect();
        let positive_set = p.positive.iter().map(|r| r.iter().cloned().collect()).collect();
        let coords = p
            .simple
            .iter()
            .zip(&p.positive)
            .map(|(s, pos)| {
                let m = simple_matrix(s, p.ambient);
                pos.iter().map(|r| m.solve(&to_rat(r))).collect()
            })
            .collect();
        Ok(RootSystemData {
            label: p.label,
            family: p.family,
            ambient: p.ambient,
            sum_zero: p.sum_zero,
            domains: p.domains,
            domain_index,
            action: p.action,
            simple: p.simple,
            positive: p.positive,
            positive_set,
            reflections,
            coords,
        })
    }

    /// Copy of the raw pieces, e.g. for building a modified system.
    pub fn parts(&self) -> RootSystemParts {
        RootSystemParts {
            label: self.label.clone(),
            family: self.family,
            ambient: self.ambient,
            sum_zero: self.sum_zero,
            domains: self.domains.clone(),
            action: self.action.clone(),
            simple: self.simple.clone(),
            positive: self.positive.clone(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.action.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn num_domains(&self) -> usize {
        self.domains.len()
    }

    pub fn domains(&self) -> &[Domain] {
        &self.domains
    }

    pub fn domain(&self, a: usize) -> &Domain {
        &self.domains[a]
    }

    pub fn domain_index(&self, d: &Domain) -> Option<usize> {
        self.domain_index.get(d).copied()
    }

    /// Index of `i ▷ a`.
    pub fn act(&self, i: usize, a: usize) -> usize {
        self.action[i][a]
    }

    pub fn simple_root(&self, i: usize, a: usize) -> &RootVector {
        &self.simple[a][i]
    }

    pub fn simple_roots(&self, a: usize) -> &[RootVector] {
        &self.simple[a]
    }

    pub fn positive_roots(&self, a: usize) -> &[RootVector] {
        &self.positive[a]
    }

    pub fn reflection(&self, i: usize, a: usize) -> &SignedPermutation {
        &self.reflections[a][i]
    }

    /// `+1` if `v ∈ R⁺_a`, `-1` if `v ∈ -R⁺_a`, `0` otherwise.
    pub fn root_sign(&self, a: usize, v: &RootVector) -> i8 {
        if self.positive_set[a].contains(v) {
            1
        } else if self.positive_set[a].contains(&v.neg()) {
            -1
        } else {
            0
        }
    }

    /// `m_{i,j;a}`: number of roots of `R_a` in the cone spanned by `α_{i,a}` and `α_{j,a}`.
    pub fn coxeter_entry(&self, i: usize, j: usize, a: usize) -> CoxeterEntry {
        assert!(i != j, "coxeter_entry needs distinct generators");
        let mut count = 0;
        for c in self.coords[a].iter().flatten() {
            if c.iter().enumerate().all(|(k, x)| k == i || k == j || x.is_zero())
                && !c[i].is_negative()
                && !c[j].is_negative()
            {
                count += 1;
            }
        }
        CoxeterEntry::Finite(count)
    }

    /// `θ(i,j;a)`, the size of the orbit of `a` under alternating products of `i` and `j`.
    pub fn theta(&self, i: usize, j: usize, a: usize) -> CoxeterEntry {
        let (mut am, mut bm) = (a, a);
        for m in 1..=2 * self.num_domains() + 2 {
            let (na, nb) = (self.act(i, bm), self.act(j, am));
            am = na;
            bm = nb;
            if am == bm {
                return CoxeterEntry::Finite(m as u32);
            }
        }
        CoxeterEntry::Infinite
    }

    pub fn check_axioms(&self) -> AxiomReport {
        check_axioms(self)
    }
}

fn to_rat(v: &RootVector) -> Vec<Rational> {
    v.0.iter().map(|&x| Rational::from_integer((x as i64).into())).collect()
}

fn simple_matrix(simple: &[RootVector], ambient: usize) -> Matrix<Rational> {
    let mut m = Matrix::zeros(ambient, simple.len());
    for (c, r) in simple.iter().enumerate() {
        for k in 0..ambient {
            m[(k, c)] = Rational::from_integer((r.0[k] as i64).into());
        }
    }
    m
}

pub fn build_root_system(family: Family) -> Result<RootSystemData, Error> {
    let domains = enumerate_domains(family);
    let index: HashMap<&Domain, usize> = domains.iter().enumerate().map(|(k, d)| (d, k)).collect();
    let rank = family.rank();
    let mut action = vec![vec![0; domains.len()]; rank];
    for (i, row) in action.iter_mut().enumerate() {
        for (a, d) in domains.iter().enumerate() {
            row[a] = index[&act(family, i, d)?];
        }
    }
    let l = family.seq_len();
    let ambient = l;
    let mut simple = Vec::with_capacity(domains.len());
    let mut positive = Vec::with_capacity(domains.len());
    for d in &domains {
        let mut pos = Vec::new();
        for i in 0..l {
            for j in i + 1..l {
                pos.push(RootVector::pair(l, i, 1, j, -1));
                if !matches!(family, Family::Gl { .. }) {
                    pos.push(RootVector::pair(l, i, 1, j, 1));
                }
            }
        }
        let mut sim: Vec<RootVector> = (0..l - 1).map(|i| RootVector::pair(l, i, 1, i + 1, -1)).collect();
        match family {
            Family::Gl { .. } => {}
            Family::OspOdd { .. } => {
                pos.extend((0..l).map(|k| RootVector::unit(l, k, 1)));
                sim.push(RootVector::unit(l, l - 1, 1));
            }
            Family::OspEven { .. } => {
                let p = d.parities();
                let tag = d.tag().expect("osp even domains carry a tag");
                for (k, &pk) in p.iter().enumerate() {
                    if pk == 1 {
                        // the long root at the last coordinate is negative at C-
                        let c = if k == l - 1 && tag == CdTag::CMinus { -2 } else { 2 };
                        pos.push(RootVector::unit(l, k, c));
                    }
                }
                match tag {
                    CdTag::D => sim.push(RootVector::pair(l, l - 2, 1, l - 1, 1)),
                    CdTag::CPlus => sim.push(RootVector::unit(l, l - 1, 2)),
                    CdTag::CMinus => {
                        sim[l - 2] = RootVector::unit(l, l - 1, -2);
                        sim.push(RootVector::pair(l, l - 2, 1, l - 1, 1));
                    }
                }
            }
        }
        debug_assert_eq!(sim.len(), rank);
        simple.push(sim);
        positive.push(pos);
    }
    RootSystemData::from_parts(RootSystemParts {
        label: family.to_string(),
        family: Some(family),
        ambient,
        sum_zero: matches!(family, Family::Gl { .. }),
        domains,
        action,
        simple,
        positive,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: usize,
    pub description: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.results.iter().find(|r| !r.passed)
    }
}

const AXIOMS: [&str; 7] = [
    "the action of the generators on the domains is transitive",
    "the simple roots of each domain form a basis of V0",
    "every root is a nonnegative or nonpositive integer combination of simple roots",
    "the only multiples of a simple root that are roots are its negatives",
    "sigma_{i,a}(alpha_{j,a}) lies in alpha_{j,i>a} + N0 alpha_{i,i>a}, with sigma_{i,a}(alpha_{i,a}) = -alpha_{i,i>a}",
    "sigma_{i,a} maps R_a onto R_{i>a} and sigma_{i,i>a} sigma_{i,a} = id",
    "theta(i,j;a) is finite and divides m_{i,j;a}",
];

fn check_axioms(rs: &RootSystemData) -> AxiomReport {
    let witnesses: [Option<String>; 7] = [
        axiom_transitive(rs),
        axiom_basis(rs),
        axiom_integral(rs),
        axiom_reduced(rs),
        axiom_simple_images(rs),
        axiom_reflections(rs),
        axiom_theta(rs),
    ];
    AxiomReport {
        results: witnesses
            .into_iter()
            .enumerate()
            .map(|(k, w)| AxiomResult { axiom: k + 1, description: AXIOMS[k], passed: w.is_none(), witness: w })
            .collect(),
    }
}

fn axiom_transitive(rs: &RootSystemData) -> Option<String> {
    let mut seen = vec![false; rs.num_domains()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(a) = stack.pop() {
        for i in 0..rs.rank() {
            let b = rs.act(i, a);
            if !seen[b] {
                seen[b] = true;
                stack.push(b);
            }
        }
        for i in 0..rs.rank() {
            if rs.act(i, rs.act(i, a)) != a {
                return Some(format!("generator {} is not an involution at {}", i + 1, rs.domain(a)));
            }
        }
    }
    seen.iter().position(|s| !s).map(|b| format!("domain {} is unreachable", rs.domain(b)))
}

fn axiom_basis(rs: &RootSystemData) -> Option<String> {
    let target = if rs.sum_zero { rs.ambient - 1 } else { rs.ambient };
    for a in 0..rs.num_domains() {
        if rs.rank() != target {
            return Some(format!("{} simple roots for a space of dimension {}", rs.rank(), target));
        }
        if rs.sum_zero {
            if let Some(r) = rs.simple[a].iter().find(|r| r.0.iter().sum::<i32>() != 0) {
                return Some(format!("simple root {} at {} is not in V0", r, rs.domain(a)));
            }
        }
        if simple_matrix(&rs.simple[a], rs.ambient).rank() != rs.rank() {
            return Some(format!("simple roots at {} are linearly dependent", rs.domain(a)));
        }
    }
    None
}

fn axiom_integral(rs: &RootSystemData) -> Option<String> {
    for a in 0..rs.num_domains() {
        for (i, r) in rs.simple[a].iter().enumerate() {
            if rs.root_sign(a, r) != 1 {
                return Some(format!("simple root {} (generator {}) at {} is not positive", r, i + 1, rs.domain(a)));
            }
        }
        for (r, c) in rs.positive[a].iter().zip(&rs.coords[a]) {
            match c {
                None => return Some(format!("root {} at {} is outside the span of the simple roots", r, rs.domain(a))),
                Some(c) => {
                    if c.iter().any(|x| !x.is_integer() || x.is_negative()) {
                        return Some(format!(
                            "positive root {} at {} has coordinates outside N0 in the simple basis",
                            r,
                            rs.domain(a)
                        ));
                    }
                }
            }
            if rs.positive_set[a].contains(&r.neg()) {
                return Some(format!("both {} and its negative are positive at {}", r, rs.domain(a)));
            }
        }
    }
    None
}

fn axiom_reduced(rs: &RootSystemData) -> Option<String> {
    for a in 0..rs.num_domains() {
        for (i, s) in rs.simple[a].iter().enumerate() {
            for r in &rs.positive[a] {
                // r parallel to s with r != s
                let parallel = (0..rs.ambient)
                    .all(|k| (0..rs.ambient).all(|l| r.0[k] as i64 * s.0[l] as i64 == r.0[l] as i64 * s.0[k] as i64));
                if parallel && r != s {
                    return Some(format!(
                        "root {} is a multiple of simple root {} (generator {}) at {}",
                        r,
                        s,
                        i + 1,
                        rs.domain(a)
                    ));
                }
            }
        }
    }
    None
}

fn simple_coords(rs: &RootSystemData, b: usize, v: &RootVector) -> Option<Vec<Rational>> {
    simple_matrix(&rs.simple[b], rs.ambient).solve(&to_rat(v))
}

fn axiom_simple_images(rs: &RootSystemData) -> Option<String> {
    for a in 0..rs.num_domains() {
        for i in 0..rs.rank() {
            let b = rs.act(i, a);
            let s = rs.reflection(i, a);
            for j in 0..rs.rank() {
                let img = s.apply(rs.simple_root(j, a));
                let ok = if i == j {
                    img == rs.simple_root(i, b).neg()
                } else {
                    let diff = img.add_scaled(-1, rs.simple_root(j, b));
                    match simple_coords(rs, b, &diff) {
                        Some(c) => c.iter().enumerate().all(|(k, x)| {
                            if k == i {
                                x.is_integer() && !x.is_negative()
                            } else {
                                x.is_zero()
                            }
                        }),
                        None => false,
                    }
                };
                if !ok {
                    return Some(format!(
                        "sigma_{{{},{}}}(alpha_{{{},{}}}) = {} violates the image rule at target {}",
                        i + 1,
                        rs.domain(a),
                        j + 1,
                        rs.domain(a),
                        img,
                        rs.domain(b)
                    ));
                }
            }
        }
    }
    None
}

fn axiom_reflections(rs: &RootSystemData) -> Option<String> {
    for a in 0..rs.num_domains() {
        for i in 0..rs.rank() {
            let b = rs.act(i, a);
            let s = rs.reflection(i, a);
            if !rs.reflection(i, b).compose(s).is_identity() {
                return Some(format!("sigma_{{{},{}}} sigma_{{{},{}}} is not the identity", i + 1, rs.domain(b), i + 1, rs.domain(a)));
            }
            for r in &rs.positive[a] {
                if rs.root_sign(b, &s.apply(r)) == 0 {
                    return Some(format!(
                        "sigma_{{{},{}}} sends root {} outside R at {}",
                        i + 1,
                        rs.domain(a),
                        r,
                        rs.domain(b)
                    ));
                }
            }
            if rs.positive[a].len() != rs.positive[b].len() {
                return Some(format!("different numbers of roots at {} and {}", rs.domain(a), rs.domain(b)));
            }
        }
    }
    None
}

fn axiom_theta(rs: &RootSystemData) -> Option<String> {
    for a in 0..rs.num_domains() {
        for i in 0..rs.rank() {
            for j in 0..rs.rank() {
                if i == j {
                    continue;
                }
                let m = rs.coxeter_entry(i, j, a).finite();
                let t = rs.theta(i, j, a).finite();
                match (t, m) {
                    (Some(t), Some(m)) if m % t == 0 => {}
                    _ => {
                        return Some(format!(
                            "theta({},{};{}) = {:?} does not divide m = {:?}",
                            i + 1,
                            j + 1,
                            rs.domain(a),
                            t,
                            m
                        ))
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::ParityDomain;

    fn idx(rs: &RootSystemData, d: Domain) -> usize {
        rs.domain_index(&d).unwrap()
    }

    #[test]
    fn gl_positive_root_count() {
        let rs = build_root_system(Family::Gl { m: 1, n: 1 }).unwrap();
        for a in 0..rs.num_domains() {
            assert_eq!(rs.positive_roots(a).len(), 6);
        }
        assert!(rs.reflection(0, 0).all_signs_positive());
    }

    #[test]
    fn osp_even_special_simple_roots() {
        let rs = build_root_system(Family::OspEven { m: 2, n: 1 }).unwrap();
        let p = ParityDomain(vec![0, 0, 1]);
        let cp = idx(&rs, Domain::Cd(crate::domains::CdDomain { parities: p.clone(), tag: CdTag::CPlus }));
        let cm = idx(&rs, Domain::Cd(crate::domains::CdDomain { parities: p, tag: CdTag::CMinus }));
        assert_eq!(rs.simple_root(2, cp), &RootVector(vec![0, 0, 2]));
        assert_eq!(rs.simple_root(1, cm), &RootVector(vec![0, 0, -2]));
        assert_eq!(rs.simple_root(2, cm), &RootVector(vec![0, 1, 1]));
    }

    #[test]
    fn coxeter_examples() {
        let rs = build_root_system(Family::Gl { m: 1, n: 1 }).unwrap();
        for a in 0..rs.num_domains() {
            assert_eq!(rs.coxeter_entry(0, 2, a), CoxeterEntry::Finite(2));
        }
        let rs = build_root_system(Family::OspOdd { m: 1, n: 2 }).unwrap();
        let a = idx(&rs, Domain::Parity(ParityDomain(vec![1, 0, 1])));
        assert_eq!(rs.coxeter_entry(1, 2, a), CoxeterEntry::Finite(4));
    }

    #[test]
    fn theta_examples() {
        let rs = build_root_system(Family::Gl { m: 1, n: 1 }).unwrap();
        let de = idx(&rs, Domain::Parity(ParityDomain(vec![0, 0, 1, 1])));
        assert_eq!(rs.theta(0, 2, de), CoxeterEntry::Finite(1));
        for a in 0..rs.num_domains() {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        assert_eq!(rs.theta(i, j, a), rs.theta(j, i, a));
                        if rs.act(i, a) == a && rs.act(j, a) == a {
                            assert_eq!(rs.theta(i, j, a), CoxeterEntry::Finite(1));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn axioms_hold() {
        for f in [Family::Gl { m: 1, n: 1 }, Family::OspEven { m: 2, n: 1 }, Family::OspOdd { m: 1, n: 2 }] {
            let r = build_root_system(f).unwrap().check_axioms();
            assert!(r.all_passed(), "{}: {:?}", f, r.first_failure());
        }
    }

    #[test]
    fn corrupted_system_fails_axiom_five() {
        let rs = build_root_system(Family::Gl { m: 1, n: 1 }).unwrap();
        let mut parts = rs.parts();
        parts.simple[0][0] = parts.simple[0][0].neg();
        let bad = RootSystemData::from_parts(parts).unwrap();
        let fail = bad.check_axioms().results.into_iter().find(|r| r.axiom == 5).unwrap();
        assert!(!fail.passed);
        assert!(fail.witness.is_some());
    }

    #[test]
    fn signed_permutation_algebra() {
        let s = SignedPermutation::reflection(&RootVector(vec![1, 1, 0])).unwrap();
        assert_eq!(s.apply(&RootVector(vec![1, 0, 0])), RootVector(vec![0, -1, 0]));
        assert!(s.compose(&s).is_identity());
        assert_eq!(s.inverse(), s);
        assert!(SignedPermutation::reflection(&RootVector(vec![1, 1, 1])).is_none());
    }
}
