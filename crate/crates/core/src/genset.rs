use std::fmt;

/// A subset of the Artin generators, stored as a bitmask (generator `s_{i+1}` is bit `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenSet(pub u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(n: usize) -> GenSet {
        if n >= 64 {
            GenSet(u64::MAX)
        } else {
            GenSet((1u64 << n) - 1)
        }
    }

    pub fn single(i: usize) -> GenSet {
        GenSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> GenSet {
        GenSet(it.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }
    pub fn with(self, i: usize) -> GenSet {
        GenSet(self.0 | (1u64 << i))
    }
    pub fn without(self, i: usize) -> GenSet {
        GenSet(self.0 & !(1u64 << i))
    }
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
    pub fn union(self, o: GenSet) -> GenSet {
        GenSet(self.0 | o.0)
    }
    pub fn inter(self, o: GenSet) -> GenSet {
        GenSet(self.0 & o.0)
    }
    pub fn minus(self, o: GenSet) -> GenSet {
        GenSet(self.0 & !o.0)
    }
    pub fn is_subset(self, o: GenSet) -> bool {
        self.0 & !o.0 == 0
    }
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        })
    }

    /// Generator names, e.g. `["s1", "s3"]`.
    pub fn names(self) -> Vec<String> {
        self.iter().map(|i| format!("s{}", i + 1)).collect()
    }

    /// Comma-separated generator names, e.g. `s1,s3`.
    pub fn key(self) -> String {
        self.names().join(",")
    }

    /// Parses `s1,s3` or `s1 s3` (also accepts bare indices `1,3`).
    pub fn parse(text: &str, rank: usize) -> crate::Result<GenSet> {
        let mut out = GenSet::EMPTY;
        let mut offset = 0;
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
            let here = offset;
            offset += tok.len() + 1;
            if tok.is_empty() {
                continue;
            }
            let digits = tok.strip_prefix('s').unwrap_or(tok);
            match digits.parse::<usize>() {
                Ok(i) if i >= 1 && i <= rank => out.insert(i - 1),
                _ => return Err(crate::Error::Parse { offset: here, message: format!("invalid generator '{tok}'") }),
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}
