//! Free graded Lie algebras, embedded in the tensor algebra.
//!
//! A Lie element is kept as a formal combination of bracket trees, but every
//! equality, rank or membership question is answered on its expansion in the
//! tensor algebra, where `[u, v] = u⊗v - (-1)^{|u||v|} v⊗u`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{KeyedSubspace, Rat};

/// Index of a generator inside its [`Alphabet`].
pub type GenId = usize;

/// A word in the tensor algebra, as a sequence of generator indices.
pub type Word = Vec<u16>;

/// Exponent vector indexed like the alphabet.
pub type Multidegree = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    name: String,
    degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Result<Self> {
        let name = name.into();
        if degree < 1 {
            return Err(Error::DegreeTooSmall { name, degree, min: 1 });
        }
        Ok(Generator { name, degree })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// Ordered generator set; the order fixes the canonical word order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<Generator>,
}

impl Alphabet {
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        if gens.len() > u16::MAX as usize {
            return Err(Error::Precondition("alphabet too large".into()));
        }
        Ok(Alphabet { gens })
    }

    pub fn from_pairs(pairs: &[(&str, u32)]) -> Result<Self> {
        let gens = pairs.iter().map(|(n, d)| Generator::new(*n, *d)).collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator(&self, id: GenId) -> &Generator {
        &self.gens[id]
    }

    pub fn degree(&self, id: GenId) -> u32 {
        self.gens[id].degree
    }

    pub fn index_of(&self, name: &str) -> Option<GenId> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn id(&self, name: &str) -> Result<GenId> {
        self.index_of(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// The generator named `name` as a Lie element.
    pub fn element(&self, name: &str) -> Result<LieElement> {
        Ok(LieElement::generator(self.id(name)?))
    }

    pub fn word_degree(&self, word: &[u16]) -> u32 {
        word.iter().map(|&g| self.gens[g as usize].degree).sum()
    }

    pub fn multidegree_degree(&self, md: &[u32]) -> u32 {
        md.iter().zip(&self.gens).map(|(e, g)| e * g.degree).sum()
    }

    pub fn min_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree).min().unwrap_or(0)
    }
}

/// Homogeneity of a graded quantity over the terms of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grade<T> {
    /// The zero element, which has every grade.
    Zero,
    Pure(T),
    Mixed,
}

impl<T: PartialEq + Copy> Grade<T> {
    fn of(mut values: impl Iterator<Item = T>) -> Self {
        let Some(first) = values.next() else { return Grade::Zero };
        if values.all(|v| v == first) {
            Grade::Pure(first)
        } else {
            Grade::Mixed
        }
    }

    pub fn pure(self) -> Option<T> {
        match self {
            Grade::Pure(v) => Some(v),
            _ => None,
        }
    }
}

/// Bracket monomial: a binary tree with generators at the leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieWord {
    Leaf(GenId),
    Node(Arc<LieWord>, Arc<LieWord>),
}

impl LieWord {
    pub fn node(left: LieWord, right: LieWord) -> Self {
        LieWord::Node(Arc::new(left), Arc::new(right))
    }

    pub fn degree(&self, alph: &Alphabet) -> u32 {
        match self {
            LieWord::Leaf(g) => alph.degree(*g),
            LieWord::Node(l, r) => l.degree(alph) + r.degree(alph),
        }
    }

    pub fn wordlength(&self) -> usize {
        match self {
            LieWord::Leaf(_) => 1,
            LieWord::Node(l, r) => l.wordlength() + r.wordlength(),
        }
    }

    pub fn multiplicity(&self, gen: GenId) -> u32 {
        match self {
            LieWord::Leaf(g) => u32::from(*g == gen),
            LieWord::Node(l, r) => l.multiplicity(gen) + r.multiplicity(gen),
        }
    }

    pub fn multidegree(&self, n_gens: usize) -> Multidegree {
        let mut md = vec![0; n_gens];
        self.add_multidegree(&mut md);
        md
    }

    fn add_multidegree(&self, md: &mut [u32]) {
        match self {
            LieWord::Leaf(g) => md[*g] += 1,
            LieWord::Node(l, r) => {
                l.add_multidegree(md);
                r.add_multidegree(md);
            }
        }
    }

    pub fn render(&self, alph: &Alphabet) -> String {
        let mut s = String::new();
        self.render_into(alph, &mut s);
        s
    }

    fn render_into(&self, alph: &Alphabet, out: &mut String) {
        match self {
            LieWord::Leaf(g) => out.push_str(alph.generator(*g).name()),
            LieWord::Node(l, r) => {
                out.push('[');
                l.render_into(alph, out);
                out.push(',');
                r.render_into(alph, out);
                out.push(']');
            }
        }
    }

    /// Tensor expansion of a single bracket monomial.
    pub fn expand(&self, alph: &Alphabet) -> TensorElement {
        match self {
            LieWord::Leaf(g) => TensorElement::word(vec![*g as u16]),
            LieWord::Node(l, r) => l.expand(alph).commutator(&r.expand(alph), alph),
        }
    }
}

/// Formal rational combination of bracket monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieElement {
    terms: Vec<(Rat, LieWord)>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(id: GenId) -> Self {
        Self::from_word(LieWord::Leaf(id))
    }

    pub fn from_word(w: LieWord) -> Self {
        LieElement { terms: vec![(Rat::one(), w)] }
    }

    pub fn from_terms(terms: Vec<(Rat, LieWord)>) -> Self {
        LieElement { terms: terms.into_iter().filter(|(c, _)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(Rat, LieWord)] {
        &self.terms
    }

    /// True when there are no formal terms. An element may still expand to zero.
    pub fn is_formally_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LieElement { terms: self.terms.iter().map(|(k, w)| (k * c, w.clone())).collect() }
    }

    pub fn plus(&self, other: &LieElement) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        LieElement { terms }
    }

    pub fn minus(&self, other: &LieElement) -> Self {
        self.plus(&other.scaled(&-Rat::one()))
    }

    /// Linear combination `Σ c_i e_i`.
    pub fn combination<'a>(parts: impl IntoIterator<Item = (Rat, &'a LieElement)>) -> Self {
        let mut terms = Vec::new();
        for (c, e) in parts {
            terms.extend(e.scaled(&c).terms);
        }
        LieElement { terms }
    }

    pub fn degree(&self, alph: &Alphabet) -> Grade<u32> {
        Grade::of(self.terms.iter().map(|(_, w)| w.degree(alph)))
    }

    /// Word length; defined only when all terms share it.
    pub fn wordlength(&self) -> Grade<usize> {
        Grade::of(self.terms.iter().map(|(_, w)| w.wordlength()))
    }

    pub fn multidegree(&self, n_gens: usize) -> Grade<()> {
        let mds: Vec<Multidegree> = self.terms.iter().map(|(_, w)| w.multidegree(n_gens)).collect();
        match mds.split_first() {
            None => Grade::Zero,
            Some((first, rest)) if rest.iter().all(|m| m == first) => Grade::Pure(()),
            _ => Grade::Mixed,
        }
    }

    /// Common multidegree of all terms, if there is one.
    pub fn common_multidegree(&self, n_gens: usize) -> Option<Multidegree> {
        let first = self.terms.first()?.1.multidegree(n_gens);
        self.terms.iter().all(|(_, w)| w.multidegree(n_gens) == first).then_some(first)
    }

    /// Relabels leaves through `map` (old id to new id).
    pub fn relabel(&self, map: &impl Fn(GenId) -> GenId) -> Self {
        fn go(w: &LieWord, map: &impl Fn(GenId) -> GenId) -> LieWord {
            match w {
                LieWord::Leaf(g) => LieWord::Leaf(map(*g)),
                LieWord::Node(l, r) => LieWord::node(go(l, map), go(r, map)),
            }
        }
        LieElement { terms: self.terms.iter().map(|(c, w)| (c.clone(), go(w, map))).collect() }
    }

    pub fn render(&self, alph: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (c, w)) in self.terms.iter().enumerate() {
            let negative = c < &Rat::zero();
            if i > 0 {
                out.push_str(if negative { " - " } else { " + " });
            } else if negative {
                out.push('-');
            }
            let abs = if negative { -c.clone() } else { c.clone() };
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&w.render(alph));
        }
        out
    }
}

/// Element of the tensor algebra: words with nonzero rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TensorElement {
    terms: BTreeMap<Word, Rat>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        TensorElement { terms: BTreeMap::from([(w, Rat::one())]) }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rat)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
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

    pub fn terms(&self) -> &BTreeMap<Word, Rat> {
        &self.terms
    }

    pub fn coefficient(&self, w: &[u16]) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, factor: &Rat) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * factor);
        }
    }

    pub fn scaled(&self, factor: &Rat) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn plus(&self, other: &TensorElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::one());
        out
    }

    pub fn minus(&self, other: &TensorElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rat::one());
        out
    }

    /// Concatenation product.
    pub fn product(&self, other: &TensorElement) -> Self {
        let mut out = Self::zero();
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, c * d);
            }
        }
        out
    }

    /// Graded commutator `uv - (-1)^{|u||v|} vu`, applied term by term.
    pub fn commutator(&self, other: &TensorElement, alph: &Alphabet) -> Self {
        let mut out = Self::zero();
        for (u, c) in &self.terms {
            let du = alph.word_degree(u);
            for (v, d) in &other.terms {
                let dv = alph.word_degree(v);
                let coeff = c * d;
                let mut uv = u.clone();
                uv.extend_from_slice(v);
                let mut vu = v.clone();
                vu.extend_from_slice(u);
                if (du * dv) % 2 == 1 {
                    out.add_term(vu, coeff.clone());
                } else {
                    out.add_term(vu, -coeff.clone());
                }
                out.add_term(uv, coeff);
            }
        }
        out
    }

    pub fn degree(&self, alph: &Alphabet) -> Grade<u32> {
        Grade::of(self.terms.keys().map(|w| alph.word_degree(w)))
    }

    /// Drops every word containing a generator rejected by `keep`.
    pub fn restrict(&self, keep: impl Fn(u16) -> bool) -> Self {
        TensorElement {
            terms: self.terms.iter().filter(|(w, _)| w.iter().all(|&g| keep(g))).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// Renames letters through `map`.
    pub fn relabel(&self, map: impl Fn(u16) -> u16) -> Self {
        TensorElement::from_terms(self.terms.iter().map(|(w, c)| (w.iter().map(|&g| map(g)).collect(), c.clone())))
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let letters: Vec<String> = w.iter().map(|g| g.to_string()).collect();
            write!(f, "{c}*<{}>", letters.join(","))?;
        }
        Ok(())
    }
}

/// Tensor expansion of a Lie element.
pub fn expand(alph: &Alphabet, e: &LieElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (c, w) in e.terms() {
        out.add_scaled(&w.expand(alph), c);
    }
    out
}

/// Bilinear bracket of formal combinations.
pub fn bracket(e1: &LieElement, e2: &LieElement) -> LieElement {
    let mut terms = Vec::with_capacity(e1.terms.len() * e2.terms.len());
    for (c, u) in &e1.terms {
        for (d, v) in &e2.terms {
            terms.push((c * d, LieWord::node(u.clone(), v.clone())));
        }
    }
    LieElement::from_terms(terms)
}

/// `ad(x)^j (y) = [x,[x,…,[x,y]…]]`.
pub fn ad_power(x: &LieElement, j: usize, y: &LieElement) -> LieElement {
    (0..j).fold(y.clone(), |acc, _| bracket(x, &acc))
}

/// Grading data of a multihomogeneous piece.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bigrade {
    pub degree: u32,
    pub wordlength: u32,
    pub multidegree: Multidegree,
}

impl Bigrade {
    pub fn of(alph: &Alphabet, multidegree: Multidegree) -> Self {
        Bigrade { degree: alph.multidegree_degree(&multidegree), wordlength: multidegree.iter().sum(), multidegree }
    }
}

/// One basis vector of a multihomogeneous piece, with its cached expansion.
#[derive(Clone, Debug)]
pub struct BasisElement {
    pub word: LieWord,
    pub tensor: TensorElement,
    pub multidegree: Multidegree,
}

impl BasisElement {
    pub fn element(&self) -> LieElement {
        LieElement::from_word(self.word.clone())
    }
}

/// Free graded Lie algebra on an alphabet, with bases built lazily per multidegree.
///
/// The basis of multidegree `α` is obtained from candidates `[g, m]`, with `g`
/// running over the alphabet and `m` over the basis of `α - e_g`, keeping each
/// candidate whose expansion raises the rank.
#[derive(Debug)]
pub struct FreeLie {
    alph: Alphabet,
    cache: Mutex<HashMap<Multidegree, Arc<Vec<BasisElement>>>>,
}

impl Clone for FreeLie {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().expect("basis cache poisoned").clone();
        FreeLie { alph: self.alph.clone(), cache: Mutex::new(cache) }
    }
}

impl FreeLie {
    pub fn new(alph: Alphabet) -> Self {
        FreeLie { alph, cache: Mutex::new(HashMap::new()) }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alph
    }

    pub fn basis_multidegree(&self, md: &[u32]) -> Arc<Vec<BasisElement>> {
        if let Some(hit) = self.cache.lock().expect("basis cache poisoned").get(md) {
            return Arc::clone(hit);
        }
        let built = Arc::new(self.build(md));
        self.cache.lock().expect("basis cache poisoned").entry(md.to_vec()).or_insert(built).clone()
    }

    fn build(&self, md: &[u32]) -> Vec<BasisElement> {
        let n = self.alph.len();
        assert_eq!(md.len(), n, "multidegree length must match the alphabet");
        let wl: u32 = md.iter().sum();
        if wl == 0 {
            return Vec::new();
        }
        if wl == 1 {
            let g = md.iter().position(|&e| e == 1).expect("wordlength one");
            return vec![BasisElement {
                word: LieWord::Leaf(g),
                tensor: TensorElement::word(vec![g as u16]),
                multidegree: md.to_vec(),
            }];
        }
        let mut span: KeyedSubspace<Word> = KeyedSubspace::new();
        let mut out = Vec::new();
        for g in 0..n {
            if md[g] == 0 {
                continue;
            }
            let mut prev = md.to_vec();
            prev[g] -= 1;
            let gen_tensor = TensorElement::word(vec![g as u16]);
            for m in self.basis_multidegree(&prev).iter() {
                let t = gen_tensor.commutator(&m.tensor, &self.alph);
                if t.is_zero() {
                    continue;
                }
                if span.insert(t.terms()) {
                    out.push(BasisElement {
                        word: LieWord::node(LieWord::Leaf(g), m.word.clone()),
                        tensor: t,
                        multidegree: md.to_vec(),
                    });
                }
            }
        }
        out
    }

    pub fn dim_multidegree(&self, md: &[u32]) -> usize {
        self.basis_multidegree(md).len()
    }

    /// Exponent vectors of total word length `n`, in decreasing lexicographic order.
    pub fn multidegrees_of_wordlength(&self, n: u32) -> Vec<Multidegree> {
        let k = self.alph.len();
        let mut out = Vec::new();
        let mut cur = vec![0u32; k];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Multidegree>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(cur.clone());
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        if k > 0 {
            rec(0, n, &mut cur, &mut out);
        }
        out
    }

    /// Exponent vectors of total degree `d`, in decreasing lexicographic order.
    pub fn multidegrees_of_degree(&self, d: u32) -> Vec<Multidegree> {
        let degs: Vec<u32> = self.alph.generators().iter().map(Generator::degree).collect();
        let mut out = Vec::new();
        let mut cur = vec![0u32; degs.len()];
        fn rec(i: usize, left: u32, degs: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Multidegree>) {
            if i == degs.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for e in (0..=left / degs[i]).rev() {
                cur[i] = e;
                rec(i + 1, left - e * degs[i], degs, cur, out);
            }
            cur[i] = 0;
        }
        if d > 0 {
            rec(0, d, &degs, &mut cur, &mut out);
        }
        out
    }

    pub fn basis_wordlength(&self, n: u32) -> Vec<BasisElement> {
        self.multidegrees_of_wordlength(n).iter().flat_map(|md| self.basis_multidegree(md).iter().cloned().collect::<Vec<_>>()).collect()
    }

    pub fn basis_degree(&self, d: u32) -> Vec<BasisElement> {
        self.multidegrees_of_degree(d).iter().flat_map(|md| self.basis_multidegree(md).iter().cloned().collect::<Vec<_>>()).collect()
    }

    pub fn dim_wordlength(&self, n: u32) -> usize {
        self.multidegrees_of_wordlength(n).iter().map(|md| self.dim_multidegree(md)).sum()
    }

    pub fn dim_degree(&self, d: u32) -> usize {
        self.multidegrees_of_degree(d).iter().map(|md| self.dim_multidegree(md)).sum()
    }

    /// Basis of the part of word length `n` containing `filter_gen` exactly `count` times.
    pub fn basis_bigraded(&self, n: u32, filter_gen: GenId, count: u32) -> Vec<BasisElement> {
        self.multidegrees_of_wordlength(n)
            .iter()
            .filter(|md| md[filter_gen] == count)
            .flat_map(|md| self.basis_multidegree(md).iter().cloned().collect::<Vec<_>>())
            .collect()
    }
}

/// Basis of the word-length-`n` component of the free Lie algebra on `alph`.
pub fn basis(alph: &Alphabet, wordlength: u32) -> Vec<LieElement> {
    FreeLie::new(alph.clone()).basis_wordlength(wordlength).iter().map(BasisElement::element).collect()
}

/// Basis of the word-length-`n` component with `filter_count` occurrences of `filter_gen`.
pub fn basis_bigraded(alph: &Alphabet, wordlength: u32, filter_gen: &Generator, filter_count: u32) -> Result<Vec<LieElement>> {
    let id = alph
        .generators()
        .iter()
        .position(|g| g == filter_gen)
        .ok_or_else(|| Error::UnknownGenerator(filter_gen.name().to_string()))?;
    Ok(FreeLie::new(alph.clone()).basis_bigraded(wordlength, id, filter_count).iter().map(BasisElement::element).collect())
}

/// Dimension of the word-length-`n` part with exactly two `b`'s in the free
/// Lie algebra on two odd generators `a`, `b`.
pub fn dim_formula_wlb2(n: u32) -> usize {
    let n = n as usize;
    match n % 4 {
        0 => (n / 2).saturating_sub(1),
        2 => n / 2,
        _ => (n - 1) / 2,
    }
}

/// `[ad^i(a)(b), ad^j(a)(b)]`.
pub fn pairbracket_element(i: usize, j: usize, a: GenId, b: GenId) -> LieElement {
    let a = LieElement::generator(a);
    let b = LieElement::generator(b);
    bracket(&ad_power(&a, i, &b), &ad_power(&a, j, &b))
}

/// Exponent pairs `(i, j)` of the pair brackets spanning word length `n` with
/// two `b`'s: `[ad^{k-1}(a)(b), ad^{n-k-1}(a)(b)]` for `k = 1, 2, …` up to the
/// bound depending on `n mod 4`.
pub fn wlb2_pair_indices(n: u32) -> Vec<(usize, usize)> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let last = match n % 4 {
        0 => n / 2 - 1,
        2 => n / 2,
        _ => (n - 1) / 2,
    };
    (1..=last).map(|k| (k - 1, n - k - 1)).collect()
}
