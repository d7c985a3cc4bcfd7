//! Exact linear algebra over the rationals.
//!
//! Everything here works with [`Rat`] (arbitrary precision rationals) and
//! never with floating point. Row spaces are kept in reduced row echelon form
//! with sparse rows; the dense [`Vector`] type is the public exchange format.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::LinError;

/// Exact rational number, always stored in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Sparse working vector: column index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Rat>;

type Row = Vec<(usize, Rat)>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Dense coordinate vector against an explicit ordered basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    coords: Vec<Rat>,
}

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector { coords: vec![Rat::zero(); dim] }
    }

    /// Standard basis vector `e_index`.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.coords[index] = Rat::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Vector { coords: values.iter().map(|&x| rat(x)).collect() }
    }

    pub fn from_rats(coords: Vec<Rat>) -> Self {
        Vector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn to_sparse(&self) -> SparseVec {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    pub fn from_sparse(dim: usize, v: &SparseVec) -> Self {
        let mut out = Self::zeros(dim);
        for (&i, c) in v {
            out.coords[i] = c.clone();
        }
        out
    }
}

/// `target -= factor * row`, dropping entries that cancel.
fn sub_scaled(target: &mut SparseVec, factor: &Rat, row: &[(usize, Rat)]) {
    for (col, value) in row {
        let delta = factor * value;
        match target.get_mut(col) {
            Some(existing) => {
                *existing -= delta;
                if existing.is_zero() {
                    target.remove(col);
                }
            }
            None => {
                target.insert(*col, -delta);
            }
        }
    }
}

/// A linear subspace of `Q^ambient_dim`, stored as the RREF basis of its row space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<Row>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let mut s = Self::zero(ambient_dim);
        for i in 0..ambient_dim {
            s.insert_sparse(SparseVec::from([(i, Rat::one())]));
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Strictly increasing pivot columns of the RREF rows.
    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> Vec<Vector> {
        self.rows
            .iter()
            .map(|r| {
                let sparse: SparseVec = r.iter().cloned().collect();
                Vector::from_sparse(self.ambient_dim, &sparse)
            })
            .collect()
    }

    fn check_dim(&self, v: &Vector) -> Result<(), LinError> {
        if v.dim() != self.ambient_dim {
            return Err(LinError::DimensionMismatch { expected: self.ambient_dim, found: v.dim() });
        }
        Ok(())
    }

    /// Reduces `v` modulo the row space; the result has zeros in every pivot column.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        // Rows are fully reduced, so clearing one pivot never touches another.
        let hits: Vec<(usize, Rat)> = self
            .pivots
            .iter()
            .enumerate()
            .filter_map(|(k, p)| v.get(p).map(|c| (k, c.clone())))
            .collect();
        for (k, factor) in hits {
            sub_scaled(&mut v, &factor, &self.rows[k]);
        }
        v
    }

    pub fn contains_sparse(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span. Returns true when the dimension grew.
    pub fn insert_sparse(&mut self, v: SparseVec) -> bool {
        let mut w = self.reduce(v);
        let Some((&pivot, lead)) = w.iter().next() else {
            return false;
        };
        debug_assert!(pivot < self.ambient_dim);
        let inv = lead.recip();
        for c in w.values_mut() {
            *c *= &inv;
        }
        let new_row: Row = w.into_iter().collect();
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&pivot, |(c, _)| *c) {
                let factor = row[pos].1.clone();
                let mut tmp: SparseVec = row.drain(..).collect();
                sub_scaled(&mut tmp, &factor, &new_row);
                *row = tmp.into_iter().collect();
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, new_row);
        true
    }

    pub fn insert(&mut self, v: &Vector) -> Result<bool, LinError> {
        self.check_dim(v)?;
        Ok(self.insert_sparse(v.to_sparse()))
    }

    pub fn contains(&self, v: &Vector) -> Result<bool, LinError> {
        self.check_dim(v)?;
        Ok(self.contains_sparse(&v.to_sparse()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.rows.iter().all(|r| other.contains_sparse(&r.iter().cloned().collect()))
    }
}

/// RREF basis of the span of `vectors` inside `Q^ambient_dim`.
pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Subspace, LinError> {
    let mut s = Subspace::zero(ambient_dim);
    for v in vectors {
        s.insert(v)?;
    }
    Ok(s)
}

pub fn member(s: &Subspace, v: &Vector) -> Result<bool, LinError> {
    s.contains(v)
}

/// Deterministic vector outside `sub`: the first standard basis vector not in
/// it, falling back to the lexicographically first `e_i + e_j`.
pub fn complement_pick(sub: &Subspace, ambient_basis_size: usize) -> Result<Vector, LinError> {
    if sub.ambient_dim() != ambient_basis_size {
        return Err(LinError::DimensionMismatch { expected: sub.ambient_dim(), found: ambient_basis_size });
    }
    if sub.dim() >= ambient_basis_size {
        return Err(LinError::NoComplement);
    }
    for i in 0..ambient_basis_size {
        let e = Vector::unit(ambient_basis_size, i);
        if !sub.contains(&e)? {
            return Ok(e);
        }
    }
    // Unreachable for a proper subspace, kept for completeness of the contract.
    for i in 0..ambient_basis_size {
        for j in i + 1..ambient_basis_size {
            let mut v = Vector::unit(ambient_basis_size, i);
            v.coords[j] = Rat::one();
            if !sub.contains(&v)? {
                return Ok(v);
            }
        }
    }
    Err(LinError::NoComplement)
}

/// `dim(big) - dim(small)`, after checking `small ⊆ big`.
pub fn quotient_dim(big: &Subspace, small: &Subspace) -> Result<usize, LinError> {
    if big.ambient_dim() != small.ambient_dim() {
        return Err(LinError::DimensionMismatch { expected: big.ambient_dim(), found: small.ambient_dim() });
    }
    if !small.is_subspace_of(big) {
        return Err(LinError::NotASubspace);
    }
    Ok(big.dim() - small.dim())
}

/// Echelon form that remembers how each row was combined from the inputs.
///
/// Used to express vectors in the coordinates of an independent family and to
/// extract the linear relations among a family of vectors.
#[derive(Clone, Debug, Default)]
pub struct TrackedEchelon {
    rows: Vec<(Row, SparseVec)>,
    pivot_row: BTreeMap<usize, usize>,
    inputs: usize,
    relations: Vec<SparseVec>,
}

impl TrackedEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    /// Reduces `v`; returns the remainder together with the input combination
    /// that was subtracted (so `v = remainder + Σ combo_i input_i`).
    fn reduce_tracked(&self, mut v: SparseVec) -> (SparseVec, SparseVec) {
        let mut combo = SparseVec::new();
        // Pivots are processed in increasing column order; a row never has
        // entries left of its pivot.
        let mut cursor = 0usize;
        loop {
            let next = self
                .pivot_row
                .range(cursor..)
                .find(|(p, _)| v.contains_key(p))
                .map(|(p, r)| (*p, *r));
            let Some((pivot, r)) = next else { break };
            let factor = v[&pivot].clone();
            let (row, row_combo) = &self.rows[r];
            sub_scaled(&mut v, &factor, row);
            for (i, c) in row_combo {
                let entry = combo.entry(*i).or_insert_with(Rat::zero);
                *entry += &factor * c;
                if entry.is_zero() {
                    combo.remove(i);
                }
            }
            cursor = pivot + 1;
        }
        (v, combo)
    }

    /// Appends an input vector. Returns `Some(relation)` when it is dependent
    /// on the previous inputs, where the relation is a kernel vector of the
    /// map `e_i ↦ input_i`.
    pub fn push(&mut self, v: SparseVec) -> Option<SparseVec> {
        let index = self.inputs;
        self.inputs += 1;
        let (rem, combo) = self.reduce_tracked(v);
        match rem.iter().next() {
            None => {
                let mut rel: SparseVec = combo.into_iter().map(|(i, c)| (i, -c)).collect();
                rel.insert(index, Rat::one());
                self.relations.push(rel.clone());
                Some(rel)
            }
            Some((&pivot, lead)) => {
                let inv = lead.recip();
                let row: Row = rem.iter().map(|(c, x)| (*c, x * &inv)).collect();
                let mut row_combo: SparseVec = combo.into_iter().map(|(i, c)| (i, -c * &inv)).collect();
                row_combo.insert(index, inv);
                self.pivot_row.insert(pivot, self.rows.len());
                self.rows.push((row, row_combo));
                None
            }
        }
    }

    /// Coefficients `c` with `v = Σ c_i input_i`, if `v` is in the span.
    pub fn express(&self, v: SparseVec) -> Option<SparseVec> {
        let (rem, combo) = self.reduce_tracked(v);
        rem.is_empty().then_some(combo)
    }

    /// All relations found so far (a basis of the kernel of `e_i ↦ input_i`).
    pub fn relations(&self) -> &[SparseVec] {
        &self.relations
    }
}

/// Lazily assigns column indices to keys (words, monomials, ...).
#[derive(Clone, Debug)]
pub struct KeyIndex<K> {
    map: HashMap<K, usize>,
}

impl<K> Default for KeyIndex<K> {
    fn default() -> Self {
        KeyIndex { map: HashMap::new() }
    }
}

impl<K: Hash + Eq + Clone> KeyIndex<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn column(&mut self, key: &K) -> usize {
        let next = self.map.len();
        *self.map.entry(key.clone()).or_insert(next)
    }

    pub fn get(&self, key: &K) -> Option<usize> {
        self.map.get(key).copied()
    }

    /// Sparse coordinates, registering unseen keys.
    pub fn encode<'a, I>(&mut self, entries: I) -> SparseVec
    where
        I: IntoIterator<Item = (&'a K, &'a Rat)>,
        K: 'a,
    {
        entries
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.column(k), c.clone()))
            .collect()
    }

    /// Sparse coordinates without registering keys; `None` if an unseen key
    /// carries a nonzero coefficient.
    pub fn try_encode<'a, I>(&self, entries: I) -> Option<SparseVec>
    where
        I: IntoIterator<Item = (&'a K, &'a Rat)>,
        K: 'a,
    {
        let mut out = SparseVec::new();
        for (k, c) in entries {
            if c.is_zero() {
                continue;
            }
            out.insert(self.get(k)?, c.clone());
        }
        Some(out)
    }
}

/// A subspace of the free vector space on keys of type `K`.
#[derive(Clone, Debug)]
pub struct KeyedSubspace<K> {
    index: KeyIndex<K>,
    space: Subspace,
}

impl<K: Hash + Eq + Clone> KeyedSubspace<K> {
    pub fn new() -> Self {
        KeyedSubspace { index: KeyIndex::new(), space: Subspace::zero(usize::MAX) }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn insert<'a, I>(&mut self, entries: I) -> bool
    where
        I: IntoIterator<Item = (&'a K, &'a Rat)>,
        K: 'a,
    {
        let v = self.index.encode(entries);
        self.space.insert_sparse(v)
    }

    pub fn contains<'a, I>(&self, entries: I) -> bool
    where
        I: IntoIterator<Item = (&'a K, &'a Rat)>,
        K: 'a,
    {
        match self.index.try_encode(entries) {
            Some(v) => self.space.contains_sparse(&v),
            None => false,
        }
    }
}

impl<K: Hash + Eq + Clone> Default for KeyedSubspace<K> {
    fn default() -> Self {
        Self::new()
    }
}
