//! Words in the generators of q(N) with no relations imposed, and the
//! Casimir entries `C^(n)_{ij}` built from them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::StructureError;
use crate::rational::Rational;
use crate::structure::{self, signed_indices, Generator, WeightVector};

/// An ordered product of generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn new(factors: Vec<Generator>) -> Self {
        Word(factors)
    }

    pub fn factors(&self) -> &[Generator] {
        &self.0
    }

    pub fn into_factors(self) -> Vec<Generator> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self) -> u8 {
        self.0.iter().map(Generator::parity).sum::<u8>() % 2
    }

    pub fn weight(&self, rank: usize) -> WeightVector {
        self.0
            .iter()
            .fold(WeightVector::zero(rank), |w, g| w.add(&g.weight(rank)))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}", g)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite linear combination of words with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    rank: usize,
    terms: BTreeMap<Word, Rational>,
}

impl AlgebraElement {
    pub fn zero(rank: usize) -> Self {
        AlgebraElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(rank: usize) -> Self {
        Self::from_word(rank, Word::unit(), Rational::one())
    }

    pub fn generator(rank: usize, g: Generator) -> Self {
        Self::from_word(rank, Word(vec![g]), Rational::one())
    }

    pub fn from_word(rank: usize, w: Word, c: Rational) -> Self {
        let mut e = Self::zero(rank);
        e.add_term(w, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(rank: usize, terms: I) -> Self {
        let mut e = Self::zero(rank);
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &AlgebraElement) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElement, k: &Rational) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * k);
        }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, k: &Rational) -> AlgebraElement {
        let mut out = Self::zero(self.rank);
        out.add_scaled(self, k);
        out
    }

    /// Free product: concatenation of words, extended bilinearly.
    pub fn mul(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = Self::zero(self.rank);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    /// `Some(p)` if every word has parity `p`.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(Word::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Supercommutator of a generator with this element, word by word.
    pub fn bracket_with(&self, g: Generator) -> AlgebraElement {
        let gw = Word(vec![g]);
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(gw.concat(w), c.clone());
            let sign = if g.parity() * w.parity() == 1 { 1 } else { -1 };
            out.add_term(w.concat(&gw), c * &Rational::from(sign));
        }
        out
    }

    /// Superbracket of two elements of the Lie superalgebra itself (every
    /// word has length one), computed from the structure constants.
    pub fn lie_bracket(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = Self::zero(self.rank);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let (a, b) = match (wa.factors(), wb.factors()) {
                    ([a], [b]) => (*a, *b),
                    _ => panic!("lie_bracket needs degree-one elements"),
                };
                let k = ca * cb;
                for (c, g) in structure::superbracket(a, b).terms() {
                    out.add_term(Word(vec![*g]), &k * &Rational::from(*c));
                }
            }
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*{}", c, w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_index(k: i32, rank: usize) -> Result<(), StructureError> {
    if rank == 0 {
        return Err(StructureError::ZeroRank);
    }
    if k == 0 {
        return Err(StructureError::ZeroIndex);
    }
    if k.unsigned_abs() as usize > rank {
        return Err(StructureError::OutOfRange { index: k, rank });
    }
    Ok(())
}

/// Every term of `C^(n)_{ij}` before like words are merged: one signed word
/// per tuple `(k_1, .., k_{n-1})`. There are `(2N)^(n-1)` of them.
pub fn casimir_paths(
    n: usize,
    i: i32,
    j: i32,
    rank: usize,
) -> Result<impl Iterator<Item = (i64, Word)>, StructureError> {
    assert!(n >= 1, "Casimir order starts at 1");
    check_index(i, rank)?;
    check_index(j, rank)?;
    let idx: Vec<i32> = signed_indices(rank).collect();
    let inner = n - 1;
    let total = idx.len().pow(inner as u32);
    Ok((0..total).map(move |mut code| {
        let mut ks = Vec::with_capacity(inner);
        for _ in 0..inner {
            ks.push(idx[code % idx.len()]);
            code /= idx.len();
        }
        let negatives = ks.iter().filter(|&&k| k < 0).count();
        let sign = if negatives % 2 == 0 { 1 } else { -1 };
        let mut factors = Vec::with_capacity(n);
        let mut prev = i;
        for &k in &ks {
            factors.push(Generator::normalized(prev, k));
            prev = k;
        }
        factors.push(Generator::normalized(prev, j));
        (sign, Word(factors))
    }))
}

/// `C^(n)_{ij} = sum F(i,k1) (-1)^{k1bar} F(k1,k2) ... F(k_{n-1},j)` as a
/// canonical element of the free algebra.
pub fn build_casimir_entry(
    n: usize,
    i: i32,
    j: i32,
    rank: usize,
) -> Result<AlgebraElement, StructureError> {
    let mut acc: HashMap<Word, i64> = HashMap::new();
    for (s, w) in casimir_paths(n, i, j, rank)? {
        *acc.entry(w).or_insert(0) += s;
    }
    Ok(AlgebraElement::from_terms(
        rank,
        acc.into_iter().map(|(w, c)| (w, Rational::from(c))),
    ))
}

/// `c_n = sum_i C^(n)_{ii}` over all signed `i`.
pub fn build_cn(n: usize, rank: usize) -> AlgebraElement {
    assert!(rank >= 1, "rank must be positive");
    let mut acc: HashMap<Word, i64> = HashMap::new();
    for i in signed_indices(rank) {
        for (s, w) in casimir_paths(n, i, i, rank).expect("valid indices") {
            *acc.entry(w).or_insert(0) += s;
        }
    }
    AlgebraElement::from_terms(
        rank,
        acc.into_iter().map(|(w, c)| (w, Rational::from(c))),
    )
}

/// Checks `C^(n)_{-i,-j} = (-1)^(n-1) C^(n)_{ij}` for every index pair.
pub fn verify_index_symmetry(n: usize, rank: usize) -> bool {
    let sign = Rational::sign((n - 1) as u32);
    signed_indices(rank).all(|i| {
        signed_indices(rank).all(|j| {
            let lhs = build_casimir_entry(n, -i, -j, rank).expect("valid indices");
            let rhs = build_casimir_entry(n, i, j, rank).expect("valid indices");
            lhs == rhs.scale(&sign)
        })
    })
}

/// Right-hand side of `C^(n+1)_{ij} = sum_k F(i,k) (-1)^{kbar} C^(n)_{kj}`.
pub fn casimir_by_recurrence(n: usize, i: i32, j: i32, rank: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero(rank);
    for k in signed_indices(rank) {
        let f = AlgebraElement::generator(rank, Generator::normalized(i, k));
        let c = build_casimir_entry(n, k, j, rank).expect("valid indices");
        let sign = if k < 0 { -Rational::one() } else { Rational::one() };
        out.add_scaled(&f.mul(&c), &sign);
    }
    out
}
