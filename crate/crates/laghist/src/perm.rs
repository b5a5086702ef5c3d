//! Permutations in one-line notation and their record, antirecord, excedance,
//! nesting, and cycle statistics.
//!
//! All public indices and values are 1-based. The empty permutation (n = 0)
//! is legal; every statistic set is then empty.

use std::fmt;

use serde::Serialize;

/// A bijection on {1..n}, stored in one-line form: `images[i-1] = σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Error building or parsing a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    /// A value outside 1..=n, at the given 1-based position.
    ValueOutOfRange { position: usize, value: usize, n: usize },
    /// A value seen twice; `position` is the second occurrence (1-based).
    DuplicateValue { position: usize, value: usize },
    /// A token that is not a positive integer, at the given 1-based position.
    InvalidToken { position: usize, token: String },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::ValueOutOfRange { position, value, n } => write!(
                f,
                "value {value} at position {position} is outside 1..={n}"
            ),
            PermError::DuplicateValue { position, value } => {
                write!(f, "value {value} repeated at position {position}")
            }
            PermError::InvalidToken { position, token } => {
                write!(f, "token {token:?} at position {position} is not a positive integer")
            }
        }
    }
}

impl std::error::Error for PermError {}

impl Permutation {
    /// Builds a permutation from its one-line images, checking that they are
    /// a rearrangement of 1..=n.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (idx, &v) in images.iter().enumerate() {
            if v == 0 || v > n {
                return Err(PermError::ValueOutOfRange { position: idx + 1, value: v, n });
            }
            if seen[v - 1] {
                return Err(PermError::DuplicateValue { position: idx + 1, value: v });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The identity permutation on {1..n}.
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// σ(i) for 1-based i. Panics if i is out of range.
    pub fn image(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.images.len(), "index {i} out of range 1..={}", self.images.len());
        self.images[i - 1]
    }

    /// The one-line images, `images()[i-1] = σ(i)`.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The inverse permutation: `inverse(p).image(p.image(i)) == i`.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0usize; self.images.len()];
        for (idx, &v) in self.images.iter().enumerate() {
            inv[v - 1] = idx + 1;
        }
        Permutation { images: inv }
    }

    /// Parses the single-line text format: space-separated 1-based images.
    /// An empty (or all-whitespace) line is the empty permutation.
    pub fn parse(text: &str) -> Result<Self, PermError> {
        let mut images = Vec::new();
        for (idx, token) in text.split_whitespace().enumerate() {
            let v: usize = token.parse().map_err(|_| PermError::InvalidToken {
                position: idx + 1,
                token: token.to_string(),
            })?;
            if v == 0 {
                return Err(PermError::InvalidToken { position: idx + 1, token: token.to_string() });
            }
            images.push(v);
        }
        Permutation::from_images(images)
    }

    /// Number of indices j with j > i and σ(j) < σ(i): how many later letters
    /// are smaller. Zero exactly when i is an antirecord position.
    pub fn lownest(&self, i: usize) -> usize {
        let si = self.image(i);
        (i + 1..=self.n()).filter(|&j| self.image(j) < si).count()
    }

    /// Number of indices j with j > i and σ⁻¹(j) < σ⁻¹(i): how many larger
    /// letters occur earlier. Zero exactly when i is a record letter.
    /// Equals `inverse().lownest(i)`.
    pub fn upnest(&self, i: usize) -> usize {
        let inv = self.inverse();
        let pi = inv.image(i);
        (i + 1..=self.n()).filter(|&j| inv.image(j) < pi).count()
    }

    /// Cycle decomposition; each cycle starts at its smallest unvisited index.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !visited[cur - 1] {
                visited[cur - 1] = true;
                cycle.push(cur);
                cur = self.image(cur);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Classifies every index as cycle valley / peak / double rise /
    /// double fall / fixed point by the signs of σ⁻¹(i)−i and σ(i)−i.
    pub fn classify(&self) -> CycleClassification {
        let inv = self.inverse();
        let kinds = (1..=self.n())
            .map(|i| {
                let prev = inv.image(i);
                let next = self.image(i);
                if next == i {
                    CycleKind::Fix
                } else if prev > i && next > i {
                    CycleKind::Cval
                } else if prev < i && next < i {
                    CycleKind::Cpeak
                } else if prev < i && next > i {
                    CycleKind::Cdrise
                } else {
                    CycleKind::Cdfall
                }
            })
            .collect();
        CycleClassification { kinds }
    }

    /// Computes all set-valued statistics of the permutation.
    pub fn profile(&self) -> StatisticProfile {
        let n = self.n();
        let mut recp = Vec::new();
        let mut arecp = Vec::new();
        let mut max_so_far = 0usize;
        for i in 1..=n {
            let v = self.image(i);
            if v > max_so_far {
                recp.push(i);
                max_so_far = v;
            }
        }
        let mut min_after = usize::MAX;
        for i in (1..=n).rev() {
            let v = self.image(i);
            if v < min_after {
                arecp.push(i);
                min_after = v;
            }
        }
        arecp.reverse();

        let recl: Vec<usize> = sorted(recp.iter().map(|&i| self.image(i)));
        let arecl: Vec<usize> = sorted(arecp.iter().map(|&i| self.image(i)));

        // A record-antirecord pair is both, hence a fixed point: its
        // position, letter-as-record, and letter-as-antirecord coincide.
        let rar: Vec<usize> = recp.iter().copied().filter(|i| arecp.contains(i)).collect();

        let erecp: Vec<usize> = recp.iter().copied().filter(|i| !rar.contains(i)).collect();
        let erecl: Vec<usize> = sorted(erecp.iter().map(|&i| self.image(i)));
        let excp: Vec<usize> = (1..=n).filter(|&i| self.image(i) > i).collect();
        let excl: Vec<usize> = sorted(excp.iter().map(|&i| self.image(i)));
        let cyc: Vec<usize> = sorted(self.cycles().iter().map(|c| *c.iter().max().unwrap()));

        StatisticProfile { recp, recl, arecp, arecl, erecp, erecl, rar, excp, excl, cyc }
    }

    /// All permutations of {1..n} in lexicographic order of one-line form.
    pub fn all(n: usize) -> PermIter {
        PermIter { next: Some(Permutation::identity(n)) }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.images {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

/// Lexicographic streaming iterator over S_n.
pub struct PermIter {
    next: Option<Permutation>,
}

impl Iterator for PermIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        self.next = next_lexicographic(&current.images).map(|images| Permutation { images });
        Some(current)
    }
}

fn next_lexicographic(images: &[usize]) -> Option<Vec<usize>> {
    let mut a = images.to_vec();
    let n = a.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    Some(a)
}

/// Kind of an index in the cycle structure: compare σ⁻¹(i), i, σ(i).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleKind {
    /// σ⁻¹(i) > i < σ(i)
    Cval,
    /// σ⁻¹(i) < i > σ(i)
    Cpeak,
    /// σ⁻¹(i) < i < σ(i)
    Cdrise,
    /// σ⁻¹(i) > i > σ(i)
    Cdfall,
    /// σ(i) = i
    Fix,
}

/// The per-index cycle kinds of a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleClassification {
    kinds: Vec<CycleKind>,
}

impl CycleClassification {
    /// The kind of index i (1-based).
    pub fn kind_of(&self, i: usize) -> CycleKind {
        self.kinds[i - 1]
    }

    /// Ascending indices with the given kind.
    pub fn positions_of(&self, kind: CycleKind) -> Vec<usize> {
        (1..=self.kinds.len()).filter(|&i| self.kinds[i - 1] == kind).collect()
    }
}

/// All set-valued statistics of a permutation: record positions/letters,
/// antirecord positions/letters, exclusive records, record-antirecords,
/// excedance positions/letters, and cycle maxima. Sets are ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatisticProfile {
    pub recp: Vec<usize>,
    pub recl: Vec<usize>,
    pub arecp: Vec<usize>,
    pub arecl: Vec<usize>,
    pub erecp: Vec<usize>,
    pub erecl: Vec<usize>,
    pub rar: Vec<usize>,
    pub excp: Vec<usize>,
    pub excl: Vec<usize>,
    pub cyc: Vec<usize>,
}

fn sorted(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn from_images_rejects_bad_input() {
        assert!(matches!(
            Permutation::from_images(vec![1, 3]),
            Err(PermError::ValueOutOfRange { position: 2, value: 3, n: 2 })
        ));
        assert!(matches!(
            Permutation::from_images(vec![2, 2]),
            Err(PermError::DuplicateValue { position: 2, value: 2 })
        ));
        assert!(matches!(
            Permutation::from_images(vec![0]),
            Err(PermError::ValueOutOfRange { position: 1, value: 0, n: 1 })
        ));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let text = "4 9 2 11 5 10 1 3 6 8 7 12 16 17 13 14 15";
        let perm = Permutation::parse(text).unwrap();
        assert_eq!(perm.to_string(), text);
        assert_eq!(Permutation::parse("").unwrap().n(), 0);
        assert_eq!(Permutation::parse("  \n").unwrap().n(), 0);
        assert!(matches!(
            Permutation::parse("1 x"),
            Err(PermError::InvalidToken { position: 2, .. })
        ));
    }

    #[test]
    fn inverse_of_three_cycle() {
        assert_eq!(p(&[2, 3, 1]).inverse(), p(&[3, 1, 2]));
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
    }

    #[test]
    fn inverse_composes_to_identity_exhaustively() {
        for n in 0..=6 {
            for perm in Permutation::all(n) {
                let inv = perm.inverse();
                for i in 1..=n {
                    assert_eq!(inv.image(perm.image(i)), i);
                }
            }
        }
    }

    #[test]
    fn classification_of_small_cases() {
        let c = p(&[2, 3, 1]).classify();
        assert_eq!(c.positions_of(CycleKind::Cval), vec![1]);
        assert_eq!(c.positions_of(CycleKind::Cdrise), vec![2]);
        assert_eq!(c.positions_of(CycleKind::Cpeak), vec![3]);

        let id = Permutation::identity(3).classify();
        assert_eq!(id.positions_of(CycleKind::Fix), vec![1, 2, 3]);
        assert_eq!(id.positions_of(CycleKind::Cval), Vec::<usize>::new());
    }

    #[test]
    fn valleys_and_peaks_balance() {
        for n in 0..=6 {
            for perm in Permutation::all(n) {
                let c = perm.classify();
                assert_eq!(
                    c.positions_of(CycleKind::Cval).len(),
                    c.positions_of(CycleKind::Cpeak).len(),
                    "valley/peak imbalance for {perm}"
                );
            }
        }
    }

    #[test]
    fn profile_of_transposition() {
        let prof = p(&[2, 1]).profile();
        assert_eq!(prof.recp, vec![1]);
        assert_eq!(prof.recl, vec![2]);
        assert_eq!(prof.arecp, vec![2]);
        assert_eq!(prof.arecl, vec![1]);
        assert_eq!(prof.erecp, vec![1]);
        assert_eq!(prof.erecl, vec![2]);
        assert_eq!(prof.rar, Vec::<usize>::new());
        assert_eq!(prof.excp, vec![1]);
        assert_eq!(prof.excl, vec![2]);
        assert_eq!(prof.cyc, vec![2]);
    }

    #[test]
    fn profile_of_identity() {
        let prof = Permutation::identity(4).profile();
        let all: Vec<usize> = (1..=4).collect();
        assert_eq!(prof.recp, all);
        assert_eq!(prof.recl, all);
        assert_eq!(prof.arecp, all);
        assert_eq!(prof.arecl, all);
        assert_eq!(prof.rar, all);
        assert_eq!(prof.cyc, all);
        assert!(prof.erecp.is_empty());
        assert!(prof.erecl.is_empty());
        assert!(prof.excp.is_empty());
        assert!(prof.excl.is_empty());
    }

    #[test]
    fn profile_of_empty_permutation() {
        let prof = Permutation::identity(0).profile();
        assert!(prof.recp.is_empty() && prof.cyc.is_empty() && prof.rar.is_empty());
    }

    #[test]
    fn nesting_counts_of_small_cases() {
        let q = p(&[3, 1, 2]);
        assert_eq!(q.lownest(1), 2);
        assert_eq!(q.upnest(2), 1);
        for i in 1..=4 {
            assert_eq!(Permutation::identity(4).lownest(i), 0);
            assert_eq!(Permutation::identity(4).upnest(i), 0);
        }
    }

    #[test]
    fn nesting_characterizes_antirecords_and_record_letters() {
        // i is an antirecord position iff nothing smaller follows; i is a
        // record letter iff nothing larger precedes it.
        for n in 0..=6 {
            for perm in Permutation::all(n) {
                let prof = perm.profile();
                for i in 1..=n {
                    assert_eq!(prof.arecp.contains(&i), perm.lownest(i) == 0, "{perm} at {i}");
                    assert_eq!(prof.recl.contains(&i), perm.upnest(i) == 0, "{perm} at {i}");
                    assert_eq!(perm.upnest(i), perm.inverse().lownest(i), "{perm} at {i}");
                }
            }
        }
    }

    #[test]
    fn profile_invariants_hold_exhaustively() {
        for n in 0..=6 {
            for perm in Permutation::all(n) {
                let prof = perm.profile();
                // records split into exclusive records and record-antirecords
                let mut rec_union = prof.erecp.clone();
                rec_union.extend(&prof.rar);
                rec_union.sort_unstable();
                assert_eq!(prof.recp, rec_union, "{perm}");
                let mut recl_union = prof.erecl.clone();
                recl_union.extend(&prof.rar);
                recl_union.sort_unstable();
                assert_eq!(prof.recl, recl_union, "{perm}");
                // record-antirecords are fixed points
                for &i in &prof.rar {
                    assert_eq!(perm.image(i), i, "{perm}");
                }
                assert!(prof.rar.iter().all(|i| prof.arecp.contains(i)));
                assert!(prof.rar.iter().all(|i| prof.arecl.contains(i)));
                assert_eq!(prof.excp.len(), prof.excl.len());
                assert_eq!(prof.cyc.len(), perm.cycles().len(), "{perm}");
            }
        }
    }

    #[test]
    fn lexicographic_enumeration_is_complete_and_ordered() {
        let all: Vec<Permutation> = Permutation::all(3).collect();
        let one_line: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            one_line,
            vec!["1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]
        );
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(5).count(), 120);
    }
}
