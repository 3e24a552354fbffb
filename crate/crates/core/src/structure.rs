//! Generators of q(N) and their superbracket.
//!
//! Signed indices run over `-N..=-1, 1..=N`. The generator `F(i,j)` equals
//! `F(-i,-j)`, so every generator is stored with `i > 0`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::StructureError;

/// `0` for a positive index, `1` for a negative one.
pub fn parity(k: i32) -> Result<u8, StructureError> {
    match k.cmp(&0) {
        Ordering::Greater => Ok(0),
        Ordering::Less => Ok(1),
        Ordering::Equal => Err(StructureError::ZeroIndex),
    }
}

fn bar(k: i32) -> u8 {
    (k < 0) as u8
}

/// All signed indices for rank `n`, in the order `-N..-1, 1..N`.
pub fn signed_indices(rank: usize) -> impl Iterator<Item = i32> + Clone {
    let n = rank as i32;
    (-n..=-1).chain(1..=n)
}

/// Position of the three-way split of q(N).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriangularClass {
    Lowering,
    CartanOdd,
    CartanEven,
    Raising,
}

/// A generator `F(i,j) = E(i,j) + E(-i,-j)` in canonical form (`i > 0`).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    i: i32,
    j: i32,
}

impl Generator {
    /// Builds `F(i,j)`, flipping both signs when `i < 0`.
    pub fn new(i: i32, j: i32) -> Result<Self, StructureError> {
        if i == 0 || j == 0 {
            return Err(StructureError::ZeroIndex);
        }
        Ok(Self::normalized(i, j))
    }

    /// Like [`Generator::new`] but also checks `|i|, |j| <= rank`.
    pub fn with_rank(i: i32, j: i32, rank: usize) -> Result<Self, StructureError> {
        if rank == 0 {
            return Err(StructureError::ZeroRank);
        }
        for k in [i, j] {
            if k.unsigned_abs() as usize > rank {
                return Err(StructureError::OutOfRange { index: k, rank });
            }
        }
        Self::new(i, j)
    }

    pub(crate) fn normalized(i: i32, j: i32) -> Self {
        debug_assert!(i != 0 && j != 0);
        if i < 0 {
            Generator { i: -i, j: -j }
        } else {
            Generator { i, j }
        }
    }

    /// The odd Cartan generator `G_i = F(-i,i) = F(i,-i)`.
    pub fn odd_cartan(i: usize) -> Self {
        assert!(i > 0);
        Generator {
            i: i as i32,
            j: -(i as i32),
        }
    }

    /// The even Cartan generator `F(i,i)`.
    pub fn even_cartan(i: usize) -> Self {
        assert!(i > 0);
        Generator {
            i: i as i32,
            j: i as i32,
        }
    }

    pub fn i(&self) -> i32 {
        self.i
    }

    pub fn j(&self) -> i32 {
        self.j
    }

    pub fn parity(&self) -> u8 {
        (bar(self.i) + bar(self.j)) % 2
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == 1
    }

    pub fn class(&self) -> TriangularClass {
        let (a, b) = (self.i.abs(), self.j.abs());
        match a.cmp(&b) {
            Ordering::Greater => TriangularClass::Lowering,
            Ordering::Less => TriangularClass::Raising,
            Ordering::Equal if self.i == self.j => TriangularClass::CartanEven,
            Ordering::Equal => TriangularClass::CartanOdd,
        }
    }

    pub fn is_cartan(&self) -> bool {
        matches!(
            self.class(),
            TriangularClass::CartanOdd | TriangularClass::CartanEven
        )
    }

    /// `e_|i| - e_|j|` as a vector of length `rank`.
    pub fn weight(&self, rank: usize) -> WeightVector {
        let mut w = vec![0; rank];
        w[self.i.unsigned_abs() as usize - 1] += 1;
        w[self.j.unsigned_abs() as usize - 1] -= 1;
        WeightVector(w)
    }

    fn sort_key(&self) -> (TriangularClass, i32, i32, u8, u8) {
        (
            self.class(),
            self.i.abs(),
            self.j.abs(),
            bar(self.i),
            bar(self.j),
        )
    }
}

/// PBW order: lowering, odd Cartan, even Cartan, raising; then by `(|i|, |j|)`
/// and signs.
impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{})", self.i, self.j)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The `2N^2` generators of q(N), sorted by the PBW order.
pub fn all_generators(rank: usize) -> Vec<Generator> {
    let mut out: Vec<Generator> = (1..=rank as i32)
        .flat_map(|i| signed_indices(rank).map(move |j| Generator { i, j }))
        .collect();
    out.sort();
    out
}

/// Coefficients of `epsilon_1..epsilon_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(pub Vec<i32>);

impl WeightVector {
    pub fn zero(rank: usize) -> Self {
        WeightVector(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// A linear combination of at most four generators with integer
/// coefficients, like terms merged.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BracketResult {
    terms: Vec<(i64, Generator)>,
}

impl BracketResult {
    fn push(&mut self, c: i64, g: Generator) {
        if let Some(slot) = self.terms.iter_mut().find(|(_, h)| *h == g) {
            slot.0 += c;
        } else {
            self.terms.push((c, g));
        }
    }

    fn finish(mut self) -> Self {
        self.terms.retain(|(c, _)| *c != 0);
        self.terms.sort_by(|a, b| a.1.cmp(&b.1));
        self
    }

    pub fn terms(&self) -> &[(i64, Generator)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: Generator) -> i64 {
        self.terms
            .iter()
            .find(|(_, h)| *h == g)
            .map_or(0, |(c, _)| *c)
    }
}

/// `[F(i,j), F(k,l)]` evaluated on raw signed indices.
pub fn superbracket_raw(i: i32, j: i32, k: i32, l: i32) -> BracketResult {
    let s: i64 = if ((bar(i) + bar(j)) * (bar(k) + bar(l))) % 2 == 0 {
        1
    } else {
        -1
    };
    let mut out = BracketResult::default();
    if k == j {
        out.push(1, Generator::normalized(i, l));
    }
    if i == l {
        out.push(-s, Generator::normalized(k, j));
    }
    if k == -j {
        out.push(1, Generator::normalized(-i, l));
    }
    if -i == l {
        out.push(-s, Generator::normalized(k, -j));
    }
    out.finish()
}

/// The superbracket `[a, b]` of two generators.
pub fn superbracket(a: Generator, b: Generator) -> BracketResult {
    superbracket_raw(a.i, a.j, b.i, b.j)
}
