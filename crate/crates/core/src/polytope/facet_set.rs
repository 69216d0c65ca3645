use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Maximum number of facets a spec may declare.
pub const MAX_FACETS: usize = 64;

/// A set of facet indices, the `I_F` of a face.
///
/// Stored 0-based as a bitmask; displayed and parsed 1-based as a
/// comma-separated ascending list (`"1,3"`), with the empty set shown as
/// the empty string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FacetSet(u64);

impl FacetSet {
    pub const EMPTY: FacetSet = FacetSet(0);

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        indices.into_iter().fold(Self::EMPTY, |s, j| s.with(j))
    }

    /// All indices `0..d`.
    pub fn full(d: usize) -> Self {
        debug_assert!(d <= MAX_FACETS);
        if d == MAX_FACETS {
            FacetSet(u64::MAX)
        } else {
            FacetSet((1u64 << d) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    #[must_use]
    pub fn with(self, j: usize) -> Self {
        FacetSet(self.0 | (1u64 << j))
    }

    #[must_use]
    pub fn without(self, j: usize) -> Self {
        FacetSet(self.0 & !(1u64 << j))
    }

    pub fn contains(self, j: usize) -> bool {
        j < MAX_FACETS && self.0 & (1u64 << j) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: FacetSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[must_use]
    pub fn union(self, other: FacetSet) -> Self {
        FacetSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: FacetSet) -> Self {
        FacetSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: FacetSet) -> Self {
        FacetSet(self.0 & !other.0)
    }

    /// Complement within `{0, .., d-1}`.
    #[must_use]
    pub fn complement(self, d: usize) -> Self {
        FacetSet::full(d).difference(self)
    }

    /// Ascending 0-based indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                j
            })
        })
    }

    /// Every subset, the empty set and `self` included.
    pub fn subsets(self) -> impl Iterator<Item = FacetSet> {
        let mask = self.0;
        let mut sub = Some(mask);
        std::iter::from_fn(move || {
            let cur = sub?;
            sub = (cur != 0).then(|| (cur - 1) & mask);
            Some(FacetSet(cur))
        })
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|j| j + 1).collect()
    }
}

impl Ord for FacetSet {
    /// Lexicographic on the ascending index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for FacetSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FacetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", j + 1)?;
        }
        Ok(())
    }
}

impl FromStr for FacetSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(FacetSet::EMPTY);
        }
        let mut set = FacetSet::EMPTY;
        for part in s.split(',') {
            let j: usize = part
                .trim()
                .parse()
                .map_err(|_| format!("invalid facet index {part:?}"))?;
            if j == 0 || j > MAX_FACETS {
                return Err(format!("facet index {j} out of range 1..={MAX_FACETS}"));
            }
            set = set.with(j - 1);
        }
        Ok(set)
    }
}
