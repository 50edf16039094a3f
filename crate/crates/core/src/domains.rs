//! Domains (objects) of the groupoids, the action of the generators on them and
//! the parity-splitting permutations `tau_plus`, `tau_minus`.
//!
//! Generator indices are 0-based in the library; generator `i` swaps positions
//! `i` and `i + 1` of a parity sequence.

use std::fmt;

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `gl(m+1|n+1)`, type `A(m, n)`.
    Gl { m: usize, n: usize },
    /// `osp(2m+1|2n)`, type `B(m, n)`.
    OspOdd { m: usize, n: usize },
    /// `osp(2m|2n)`, type `D(m, n)` (and `C(n+1)` when `m = 1`).
    OspEven { m: usize, n: usize },
}

impl Family {
    pub fn gl(m: usize, n: usize) -> Result<Self, Error> {
        Ok(Family::Gl { m, n })
    }

    pub fn osp_odd(m: usize, n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameters("B(m, n) needs n >= 1".into()));
        }
        Ok(Family::OspOdd { m, n })
    }

    pub fn osp_even(m: usize, n: usize) -> Result<Self, Error> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameters("D(m, n) needs m >= 1 and n >= 1".into()));
        }
        Ok(Family::OspEven { m, n })
    }

    /// `C(k) = osp(2|2(k-1))`.
    pub fn c(k: usize) -> Result<Self, Error> {
        if k < 2 {
            return Err(Error::InvalidParameters("C(n) needs n >= 2".into()));
        }
        Self::osp_even(1, k - 1)
    }

    pub fn m(&self) -> usize {
        match *self {
            Family::Gl { m, .. } | Family::OspOdd { m, .. } | Family::OspEven { m, .. } => m,
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            Family::Gl { n, .. } | Family::OspOdd { n, .. } | Family::OspEven { n, .. } => n,
        }
    }

    /// Length of the parity sequences, which is also the number of coordinates.
    pub fn seq_len(&self) -> usize {
        match *self {
            Family::Gl { m, n } => m + n + 2,
            Family::OspOdd { m, n } | Family::OspEven { m, n } => m + n,
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            Family::Gl { m, n } => m + n + 1,
            Family::OspOdd { m, n } | Family::OspEven { m, n } => m + n,
        }
    }

    /// Sizes of the even and odd blocks permuted by `tau_plus` and `tau_minus`.
    pub fn block_sizes(&self) -> (usize, usize) {
        match *self {
            Family::Gl { m, n } => (m + 1, n + 1),
            Family::OspOdd { m, n } | Family::OspEven { m, n } => (m, n),
        }
    }

    pub fn short_name(&self) -> &'static str {
        match self {
            Family::Gl { .. } => "A",
            Family::OspOdd { .. } => "B",
            Family::OspEven { .. } => "D",
        }
    }

    pub fn superalgebra(&self) -> String {
        match *self {
            Family::Gl { m, n } => format!("gl({}|{})", m + 1, n + 1),
            Family::OspOdd { m, n } => format!("osp({}|{})", 2 * m + 1, 2 * n),
            Family::OspEven { m, n } => format!("osp({}|{})", 2 * m, 2 * n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.short_name(), self.m(), self.n())
    }
}

/// A sequence of parities, each 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityDomain(pub Vec<u8>);

impl ParityDomain {
    pub fn parities(&self) -> &[u8] {
        &self.0
    }

    pub fn swapped(&self, i: usize) -> ParityDomain {
        let mut p = self.0.clone();
        p.swap(i, i + 1);
        ParityDomain(p)
    }
}

impl fmt::Display for ParityDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CdTag {
    D,
    CPlus,
    CMinus,
}

impl CdTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CdTag::D => "D",
            CdTag::CPlus => "C+",
            CdTag::CMinus => "C-",
        }
    }
}

/// Domain of the `osp(2m|2n)` groupoid: tag `D` when the last parity is 0,
/// `C+` or `C-` when it is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CdDomain {
    pub parities: ParityDomain,
    pub tag: CdTag,
}

impl fmt::Display for CdDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.parities, self.tag.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    Parity(ParityDomain),
    Cd(CdDomain),
    /// The unique object of a classical Weyl group viewed as a groupoid.
    Single,
}

impl Domain {
    pub fn parities(&self) -> &[u8] {
        match self {
            Domain::Parity(p) => p.parities(),
            Domain::Cd(c) => c.parities.parities(),
            Domain::Single => &[],
        }
    }

    pub fn tag(&self) -> Option<CdTag> {
        match self {
            Domain::Cd(c) => Some(c.tag),
            _ => None,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Parity(p) => write!(f, "{}", p),
            Domain::Cd(c) => write!(f, "{}", c),
            Domain::Single => write!(f, "*"),
        }
    }
}

/// Binary sequences of length `len` with exactly `ones` ones, in lexicographic order.
fn binary_sequences(len: usize, ones: usize) -> Vec<Vec<u8>> {
    fn rec(len: usize, ones: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let left = len - cur.len();
        let placed = cur.iter().filter(|&&b| b == 1).count();
        let need = ones - placed;
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if need < left {
            cur.push(0);
            rec(len, ones, cur, out);
            cur.pop();
        }
        if need > 0 {
            cur.push(1);
            rec(len, ones, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if ones <= len {
        rec(len, ones, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

/// All domains, sorted: lexicographic in the parities, then `D < C+ < C-`.
pub fn enumerate_domains(family: Family) -> Vec<Domain> {
    match family {
        Family::Gl { m, n } => binary_sequences(m + n + 2, n + 1)
            .into_iter()
            .map(|p| Domain::Parity(ParityDomain(p)))
            .collect(),
        Family::OspOdd { m, n } => binary_sequences(m + n, n)
            .into_iter()
            .map(|p| Domain::Parity(ParityDomain(p)))
            .collect(),
        Family::OspEven { m, n } => {
            let mut out = Vec::new();
            for p in binary_sequences(m + n, n) {
                let tags: &[CdTag] =
                    if *p.last().unwrap() == 0 { &[CdTag::D] } else { &[CdTag::CPlus, CdTag::CMinus] };
                for &tag in tags {
                    out.push(Domain::Cd(CdDomain { parities: ParityDomain(p.clone()), tag }));
                }
            }
            out
        }
    }
}

/// `i ▷ a`.
pub fn act(family: Family, i: usize, a: &Domain) -> Result<Domain, Error> {
    let rank = family.rank();
    if i >= rank {
        return Err(Error::InvalidGenerator { index: i, rank });
    }
    match (family, a) {
        (Family::Gl { .. }, Domain::Parity(p)) if p.0.len() == family.seq_len() => {
            Ok(Domain::Parity(p.swapped(i)))
        }
        (Family::OspOdd { .. }, Domain::Parity(p)) if p.0.len() == family.seq_len() => {
            if i + 1 == rank {
                Ok(a.clone())
            } else {
                Ok(Domain::Parity(p.swapped(i)))
            }
        }
        (Family::OspEven { .. }, Domain::Cd(c)) if c.parities.0.len() == family.seq_len() => {
            Ok(Domain::Cd(act_cd(rank, i, c)))
        }
        _ => Err(Error::InvalidDomain(a.to_string())),
    }
}

fn act_cd(l: usize, i: usize, c: &CdDomain) -> CdDomain {
    let p = &c.parities.0;
    let swap = |tag| CdDomain { parities: c.parities.swapped(i.min(l - 2)), tag };
    // generators `l - 2` and `l - 1` both swap the last two parities when they differ
    if i + 2 < l {
        if p[i] != p[i + 1] {
            return swap(c.tag);
        }
        return c.clone();
    }
    let differ = p[l - 2] != p[l - 1];
    match (i + 2 == l, c.tag) {
        (true, CdTag::D) if differ => swap(CdTag::CPlus),
        (true, CdTag::CPlus) if differ => swap(CdTag::D),
        (false, CdTag::D) if differ => swap(CdTag::CMinus),
        (false, CdTag::CMinus) if differ => swap(CdTag::D),
        _ => c.clone(),
    }
}

/// A permutation of `{0, .., k-1}` given by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inversions(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    /// One-line notation counting from 1.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.one_line() {
            write!(f, "{}", x)?;
        }
        Ok(())
    }
}

fn positions(d: &[u8], bit: u8) -> impl Iterator<Item = usize> + '_ {
    d.iter().enumerate().filter(move |(_, &b)| b == bit).map(|(k, _)| k)
}

/// Sends the first `m'` indices onto the even positions of `d` and the remaining
/// ones onto the odd positions, both increasingly.
pub fn tau_plus(family: Family, d: &Domain) -> Result<Permutation, Error> {
    check_domain(family, d)?;
    let p = d.parities();
    Ok(Permutation(positions(p, 0).chain(positions(p, 1)).collect()))
}

/// Sends the first `n'` indices onto the odd positions of `d` and the remaining
/// ones onto the even positions, both increasingly.
pub fn tau_minus(family: Family, d: &Domain) -> Result<Permutation, Error> {
    check_domain(family, d)?;
    let p = d.parities();
    Ok(Permutation(positions(p, 1).chain(positions(p, 0)).collect()))
}

fn check_domain(family: Family, d: &Domain) -> Result<(), Error> {
    let p = d.parities();
    let (_, odd) = family.block_sizes();
    let ok = p.len() == family.seq_len()
        && p.iter().filter(|&&b| b == 1).count() == odd
        && p.iter().all(|&b| b <= 1)
        && match (family, d) {
            (Family::OspEven { .. }, Domain::Cd(c)) => (c.tag == CdTag::D) == (*p.last().unwrap() == 0),
            (Family::OspEven { .. }, _) => false,
            (_, Domain::Parity(_)) => true,
            _ => false,
        };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidDomain(d.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(v: &[u8]) -> Domain {
        Domain::Parity(ParityDomain(v.to_vec()))
    }

    fn cd(v: &[u8], tag: CdTag) -> Domain {
        Domain::Cd(CdDomain { parities: ParityDomain(v.to_vec()), tag })
    }

    #[test]
    fn domain_counts() {
        assert_eq!(enumerate_domains(Family::Gl { m: 1, n: 1 }).len(), 6);
        assert_eq!(enumerate_domains(Family::Gl { m: 2, n: 1 }).len(), 10);
        assert_eq!(enumerate_domains(Family::OspOdd { m: 1, n: 2 }).len(), 3);
        assert_eq!(enumerate_domains(Family::OspEven { m: 2, n: 1 }).len(), 4);
        assert_eq!(enumerate_domains(Family::OspEven { m: 3, n: 1 }).len(), 5);
    }

    #[test]
    fn cd_order_puts_tags_last() {
        let ds = enumerate_domains(Family::OspEven { m: 1, n: 1 });
        assert_eq!(ds, vec![cd(&[0, 1], CdTag::CPlus), cd(&[0, 1], CdTag::CMinus), cd(&[1, 0], CdTag::D)]);
    }

    #[test]
    fn worked_example_tau_values() {
        let f = Family::Gl { m: 1, n: 1 };
        let expected = [
            ([0, 0, 1, 1], "1234", "3412"),
            ([0, 1, 0, 1], "1324", "2413"),
            ([0, 1, 1, 0], "1423", "2314"),
            ([1, 0, 0, 1], "2314", "1423"),
            ([1, 0, 1, 0], "2413", "1324"),
            ([1, 1, 0, 0], "3412", "1234"),
        ];
        for (d, tp, tm) in expected {
            let d = pd(&d);
            assert_eq!(tau_plus(f, &d).unwrap().to_string(), tp, "tau+ at {}", d);
            assert_eq!(tau_minus(f, &d).unwrap().to_string(), tm, "tau- at {}", d);
        }
    }

    #[test]
    fn osp_odd_last_generator_is_trivial() {
        let f = Family::OspOdd { m: 1, n: 2 };
        for d in enumerate_domains(f) {
            assert_eq!(act(f, 2, &d).unwrap(), d);
        }
    }

    #[test]
    fn osp_even_table() {
        let f = Family::OspEven { m: 3, n: 1 };
        let dd = cd(&[0, 0, 1, 0], CdTag::D);
        assert_eq!(act(f, 2, &dd).unwrap(), cd(&[0, 0, 0, 1], CdTag::CPlus));
        assert_eq!(act(f, 3, &dd).unwrap(), cd(&[0, 0, 0, 1], CdTag::CMinus));
        assert_eq!(act(f, 2, &cd(&[0, 0, 0, 1], CdTag::CPlus)).unwrap(), dd);
        assert_eq!(act(f, 3, &cd(&[0, 0, 0, 1], CdTag::CMinus)).unwrap(), dd);
        let cp = cd(&[0, 0, 0, 1], CdTag::CPlus);
        assert_eq!(act(f, 3, &cp).unwrap(), cp);
        assert_eq!(act(f, 1, &dd).unwrap(), cd(&[0, 1, 0, 0], CdTag::D));
    }

    #[test]
    fn invalid_inputs() {
        let f = Family::Gl { m: 1, n: 1 };
        assert!(matches!(act(f, 3, &pd(&[0, 0, 1, 1])), Err(Error::InvalidGenerator { .. })));
        assert!(matches!(act(f, 0, &pd(&[0, 1])), Err(Error::InvalidDomain(_))));
        assert!(tau_plus(f, &pd(&[0, 1, 1, 1])).is_err());
        assert!(Family::osp_even(0, 1).is_err());
        assert!(Family::c(1).is_err());
        assert_eq!(Family::c(3).unwrap(), Family::OspEven { m: 1, n: 2 });
    }

    #[test]
    fn permutation_basics() {
        let p = Permutation(vec![2, 0, 1]);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert_eq!(p.inversions(), 2);
    }
}
