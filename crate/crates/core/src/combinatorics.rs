//! Partitions, dissection counts and a brute-force dissection enumerator.
//!
//! A dissection of a convex `n`-gon is a set of pairwise non-crossing
//! chords. Its type is the partition `lambda` of `n - 2` in which a cell
//! with `i + 2` sides contributes a part `i`. [`count_p`] gives the number
//! of dissections of each type in closed form; [`enumerate_dissections`]
//! counts them by walking every chord set, and the two must agree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// An integer partition, stored as its parts in non-increasing order.
///
/// The derived ordering is lexicographic on that part list, so iterating a
/// `BTreeMap<Partition, _>` in reverse yields decreasing-lexicographic order
/// (the order [`partitions`] produces).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Parts may be given in any order; zero parts are dropped.
    pub fn from_parts(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Builds `lambda` from pairs `(i, lambda_i)`.
    pub fn from_multiplicities(mults: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::from_parts(
            mults
                .into_iter()
                .flat_map(|(part, mult)| std::iter::repeat_n(part, mult)),
        )
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `(i, lambda_i)` for every part size present, ascending in `i`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// `sum_i i * lambda_i`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `sum_i lambda_i`, the number of cells of a dissection of this type.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// `n = weight + 2`: the polygon whose dissections have this type.
    pub fn polygon_size(&self) -> usize {
        self.weight() + 2
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// `1^a 2^b ...` with ascending part sizes; exponent 1 is omitted. The empty
/// partition renders as `()`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        for (idx, (part, mult)) in self.multiplicities().into_iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{part}")?;
            if mult > 1 {
                write!(f, "^{mult}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse partition {0:?}")]
pub struct ParsePartitionError(String);

impl FromStr for Partition {
    type Err = ParsePartitionError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s == "()" {
            return Ok(Self::default());
        }
        let err = || ParsePartitionError(s.to_owned());
        let mut mults = Vec::new();
        for token in s.split_whitespace() {
            let (part, mult) = match token.split_once('^') {
                Some((p, m)) => (p.parse().map_err(|_| err())?, m.parse().map_err(|_| err())?),
                None => (token.parse().map_err(|_| err())?, 1),
            };
            if part == 0 || mult == 0 {
                return Err(err());
            }
            mults.push((part, mult));
        }
        if mults.is_empty() {
            return Err(err());
        }
        Ok(Self::from_multiplicities(mults))
    }
}

/// All partitions of `m` in decreasing-lexicographic order of their part
/// lists: `[4], [3,1], [2,2], [2,1,1], [1,1,1,1]` for `m = 4`.
pub fn partitions(m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_into(m, m, &mut current, &mut out);
    out
}

fn partitions_into(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        partitions_into(remaining - part, part, current, out);
        current.pop();
    }
}

fn factorial_memo() -> &'static Mutex<Vec<BigInt>> {
    static MEMO: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(vec![BigInt::one()]))
}

/// `n!`, memoized for the life of the process.
pub fn factorial(n: usize) -> BigInt {
    let mut memo = factorial_memo().lock().unwrap_or_else(|e| e.into_inner());
    while memo.len() <= n {
        let next = memo.last().unwrap() * BigInt::from(memo.len());
        memo.push(next);
    }
    memo[n].clone()
}

fn require_nonempty(lambda: &Partition) -> Result<()> {
    if lambda.is_empty() {
        return Err(Error::OutOfRange {
            what: "partition weight",
            min: 1,
            got: 0,
        });
    }
    Ok(())
}

/// Number of dissections of an `n`-gon (`n = weight + 2`) of type `lambda`:
/// `(n - 2 + k)! / ((n - 1)! prod_i lambda_i!)` with `k = sum_i lambda_i`.
pub fn count_p(lambda: &Partition) -> Result<BigInt> {
    require_nonempty(lambda)?;
    let n = lambda.polygon_size();
    let numerator = factorial(n - 2 + lambda.part_count());
    let denominator = lambda
        .multiplicities()
        .values()
        .fold(factorial(n - 1), |acc, &m| acc * factorial(m));
    numerator
        .div_exact(&denominator)
        .ok_or_else(|| Error::inexact(format!("P({lambda})")))
}

/// Number of stable genus-zero dual graphs of type `lambda`:
/// `P(lambda) (n - 1)! / prod_i ((i + 1)!)^lambda_i`.
pub fn count_t(lambda: &Partition) -> Result<BigInt> {
    let p = count_p(lambda)?;
    let n = lambda.polygon_size();
    let denominator = lambda
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (part, mult)| {
            acc * factorial(part + 1).pow(mult as u32)
        });
    (p * factorial(n - 1))
        .div_exact(&denominator)
        .ok_or_else(|| Error::inexact(format!("T({lambda})")))
}

/// A chord `{a, b}` with `a < b`, vertices labelled `0 .. n-1` around the
/// polygon.
pub type Chord = (usize, usize);

/// A set of pairwise non-crossing diagonals of a convex polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dissection {
    polygon_size: usize,
    chords: Vec<Chord>,
}

/// Two diagonals cross iff they share no endpoint and exactly one endpoint
/// of the second lies strictly between the endpoints of the first.
pub fn chords_cross((a, b): Chord, (c, d): Chord) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let between = |v: usize| a < v && v < b;
    between(c) != between(d)
}

fn is_diagonal(n: usize, (a, b): Chord) -> bool {
    a < b && b < n && b - a >= 2 && !(a == 0 && b == n - 1)
}

/// All diagonals of an `n`-gon, in lexicographic order.
pub fn diagonals(n: usize) -> Vec<Chord> {
    (0..n)
        .flat_map(|a| (a + 2..n).map(move |b| (a, b)))
        .filter(|&c| is_diagonal(n, c))
        .collect()
}

impl Dissection {
    /// Validates the chord set; endpoints of each chord may be given in
    /// either order.
    pub fn new(polygon_size: usize, chords: impl IntoIterator<Item = Chord>) -> Result<Self> {
        if polygon_size < 3 {
            return Err(Error::OutOfRange {
                what: "polygon size",
                min: 3,
                got: polygon_size,
            });
        }
        let mut normalized: Vec<Chord> = chords
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        normalized.sort_unstable();
        normalized.dedup();
        for (idx, &c) in normalized.iter().enumerate() {
            if !is_diagonal(polygon_size, c) {
                return Err(Error::InvalidDissection(format!(
                    "{c:?} is not a diagonal of a {polygon_size}-gon"
                )));
            }
            if let Some(&other) = normalized[..idx].iter().find(|&&o| chords_cross(o, c)) {
                return Err(Error::InvalidDissection(format!(
                    "chords {other:?} and {c:?} cross"
                )));
            }
        }
        Ok(Self {
            polygon_size,
            chords: normalized,
        })
    }

    pub fn polygon_size(&self) -> usize {
        self.polygon_size
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    /// Side counts of the cells, sorted descending.
    pub fn cell_sizes(&self) -> Vec<usize> {
        let vertices: Vec<usize> = (0..self.polygon_size).collect();
        let mut sizes = Vec::with_capacity(self.chords.len() + 1);
        split_cells(&vertices, &self.chords, &mut sizes);
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// The type `lambda`: a cell with `i + 2` sides is a part `i`.
    pub fn partition(&self) -> Partition {
        Partition::from_parts(self.cell_sizes().into_iter().map(|s| s - 2))
    }
}

/// Splits the polygon with the given boundary (in cyclic order) along its
/// first chord and recurses on both halves. Every chord passed in has both
/// endpoints on `boundary`.
fn split_cells(boundary: &[usize], chords: &[Chord], sizes: &mut Vec<usize>) {
    let Some((&(a, b), rest)) = chords.split_first() else {
        sizes.push(boundary.len());
        return;
    };
    let i = boundary
        .iter()
        .position(|&v| v == a)
        .expect("chord endpoint on boundary");
    let j = boundary
        .iter()
        .position(|&v| v == b)
        .expect("chord endpoint on boundary");
    let (i, j) = (i.min(j), i.max(j));
    let inside: Vec<usize> = boundary[i..=j].to_vec();
    let outside: Vec<usize> = boundary[j..]
        .iter()
        .chain(&boundary[..=i])
        .copied()
        .collect();
    let on = |side: &[usize], (c, d): Chord| side.contains(&c) && side.contains(&d);
    let inside_chords: Vec<Chord> = rest.iter().copied().filter(|&c| on(&inside, c)).collect();
    let outside_chords: Vec<Chord> = rest.iter().copied().filter(|&c| !on(&inside, c)).collect();
    split_cells(&inside, &inside_chords, sizes);
    split_cells(&outside, &outside_chords, sizes);
}

/// Calls `visit` once for every dissection of the `n`-gon, the empty one
/// included.
///
/// Depth-first over the diagonals in lexicographic order; a chord is only
/// added after the last one added and only if it crosses none of the current
/// set, so each chord set is produced exactly once.
pub fn for_each_dissection(n: usize, mut visit: impl FnMut(&Dissection)) -> Result<()> {
    if n < 3 {
        return Err(Error::OutOfRange {
            what: "polygon size",
            min: 3,
            got: n,
        });
    }
    let all = diagonals(n);
    let mut current = Dissection {
        polygon_size: n,
        chords: Vec::new(),
    };
    extend_dissection(&all, 0, &mut current, &mut visit);
    Ok(())
}

fn extend_dissection(
    all: &[Chord],
    from: usize,
    current: &mut Dissection,
    visit: &mut impl FnMut(&Dissection),
) {
    visit(current);
    for idx in from..all.len() {
        let c = all[idx];
        if current.chords.iter().all(|&o| !chords_cross(o, c)) {
            current.chords.push(c);
            extend_dissection(all, idx + 1, current, visit);
            current.chords.pop();
        }
    }
}

/// Brute-force census: the number of dissections of the `n`-gon of each
/// type. Types that do not occur are absent from the map.
pub fn enumerate_dissections(n: usize) -> Result<BTreeMap<Partition, u64>> {
    let mut counts = BTreeMap::new();
    for_each_dissection(n, |d| *counts.entry(d.partition()).or_insert(0) += 1)?;
    Ok(counts)
}

/// A type whose enumerated count differs from [`count_p`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusMismatch {
    pub lambda: Partition,
    pub enumerated: u64,
    pub formula: BigInt,
}

/// Compares the brute-force census of the `n`-gon with `P(lambda)` for every
/// `lambda |- n - 2`. Returns the enumerated total and all disagreements.
pub fn census_mismatches(n: usize) -> Result<(u64, Vec<CensusMismatch>)> {
    let census = enumerate_dissections(n)?;
    let total = census.values().sum();
    let mut mismatches = Vec::new();
    for lambda in partitions(n - 2) {
        let enumerated = census.get(&lambda).copied().unwrap_or(0);
        let formula = count_p(&lambda)?;
        if formula != BigInt::from(enumerated) {
            mismatches.push(CensusMismatch {
                lambda,
                enumerated,
                formula,
            });
        }
    }
    // types outside the partition list would be an enumerator bug
    if census.keys().any(|l| l.weight() != n - 2) {
        return Err(Error::InvalidDissection(format!(
            "census of the {n}-gon has a type of the wrong weight"
        )));
    }
    Ok((total, mismatches))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(pairs: &[(usize, usize)]) -> Partition {
        Partition::from_multiplicities(pairs.iter().copied())
    }

    // Independent partition counter: p(m) via the standard coin-change DP.
    fn partition_count_dp(m: usize) -> u64 {
        let mut ways = vec![0u64; m + 1];
        ways[0] = 1;
        for part in 1..=m {
            for total in part..=m {
                ways[total] += ways[total - part];
            }
        }
        ways[m]
    }

    #[test]
    fn small_partitions() {
        assert_eq!(partitions(0), vec![Partition::default()]);
        let four: Vec<Vec<usize>> = partitions(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn partition_counts_match_dp() {
        assert_eq!(partition_count_dp(23), 1255);
        for m in 0..=23 {
            let ps = partitions(m);
            assert_eq!(ps.len() as u64, partition_count_dp(m), "m = {m}");
            assert!(ps.iter().all(|p| p.weight() == m));
            // strictly decreasing order means no duplicates either
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn hexagon_counts() {
        assert_eq!(count_p(&lam(&[(3, 1), (1, 1)])).unwrap(), 6.into());
        assert_eq!(count_p(&lam(&[(2, 2)])).unwrap(), 3.into());
        assert_eq!(count_p(&lam(&[(2, 1), (1, 2)])).unwrap(), 21.into());
        assert_eq!(count_p(&lam(&[(1, 4)])).unwrap(), 14.into());
        assert_eq!(count_p(&lam(&[(4, 1)])).unwrap(), 1.into());
    }

    #[test]
    fn single_part_counts_are_one() {
        for i in 1..15 {
            assert_eq!(count_p(&lam(&[(i, 1)])).unwrap(), BigInt::one());
            assert_eq!(count_t(&lam(&[(i, 1)])).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn dual_graph_counts() {
        assert_eq!(count_t(&lam(&[(1, 2)])).unwrap(), 3.into());
        assert_eq!(count_t(&lam(&[(2, 2)])).unwrap(), 10.into());
    }

    #[test]
    fn empty_partition_has_no_count() {
        assert!(count_p(&Partition::default()).is_err());
        assert!(count_t(&Partition::default()).is_err());
    }

    #[test]
    fn crossing_rule() {
        assert!(chords_cross((0, 2), (1, 3)));
        assert!(!chords_cross((0, 2), (2, 4)));
        assert!(!chords_cross((0, 3), (0, 2)));
        assert!(!chords_cross((0, 4), (1, 3)));
        assert!(chords_cross((1, 4), (0, 2)));
    }

    #[test]
    fn square_census() {
        let counts = enumerate_dissections(4).unwrap();
        assert_eq!(counts.len(), 2);
        assert_eq!(counts[&lam(&[(2, 1)])], 1);
        assert_eq!(counts[&lam(&[(1, 2)])], 2);
    }

    #[test]
    fn hexagon_census() {
        let counts = enumerate_dissections(6).unwrap();
        let expected = [
            (lam(&[(4, 1)]), 1),
            (lam(&[(3, 1), (1, 1)]), 6),
            (lam(&[(2, 2)]), 3),
            (lam(&[(2, 1), (1, 2)]), 21),
            (lam(&[(1, 4)]), 14),
        ];
        assert_eq!(counts, expected.into_iter().collect());
    }

    #[test]
    fn census_rejects_degenerate_polygons() {
        assert!(enumerate_dissections(2).is_err());
        assert!(enumerate_dissections(0).is_err());
    }

    #[test]
    fn cells_are_consistent_with_chords() {
        for n in 3..=9 {
            for_each_dissection(n, |d| {
                let lambda = d.partition();
                assert_eq!(lambda.part_count(), d.chords().len() + 1);
                assert_eq!(lambda.weight(), n - 2);
                assert!(d.cell_sizes().iter().all(|&s| s >= 3));
            })
            .unwrap();
        }
    }

    #[test]
    fn dissection_validation() {
        assert!(Dissection::new(6, [(0, 3), (3, 0)]).is_ok());
        assert!(Dissection::new(6, [(0, 3), (1, 4)]).is_err());
        assert!(Dissection::new(6, [(0, 1)]).is_err());
        assert!(Dissection::new(6, [(0, 5)]).is_err());
        assert!(Dissection::new(2, []).is_err());
        let d = Dissection::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap();
        assert_eq!(d.partition(), lam(&[(1, 4)]));
    }

    #[test]
    fn partition_text_round_trip() {
        let p = lam(&[(1, 2), (2, 1)]);
        assert_eq!(p.to_string(), "1^2 2");
        assert_eq!("1^2 2".parse::<Partition>().unwrap(), p);
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::default());
        assert_eq!(Partition::default().to_string(), "()");
        assert!("1^0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), 120.into());
        assert_eq!(factorial(20), BigInt::from(2_432_902_008_176_640_000u64));
    }
}
