//! Sullivan algebras: free graded-commutative algebras `ΛV` with a degree +1
//! differential, truncated at a degree cap.
//!
//! Monomials are exponent vectors in generator order; odd generators appear
//! with exponent at most one and the normal form is the product in increasing
//! generator order. Products pick up the Koszul sign of reordering odd factors.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::dgla::Dgla;
use crate::error::{Error, Result};
use crate::exactlin::{ratio, KeyIndex, KeyedSubspace, Rat, SparseVec, TrackedEchelon};
use crate::freelie::{Alphabet, GenId, Generator, Grade, LieElement, TensorElement, Word};

/// Generators of a simply connected Sullivan algebra (degrees at least 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdgaGenSet {
    alph: Alphabet,
}

impl CdgaGenSet {
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() < 2) {
            return Err(Error::DegreeTooSmall { name: g.name().to_string(), degree: g.degree(), min: 2 });
        }
        Ok(CdgaGenSet { alph: Alphabet::new(gens)? })
    }

    pub fn from_pairs(pairs: &[(&str, u32)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(n, d)| Generator::new(n, d)).collect::<Result<Vec<_>>>()?)
    }

    pub fn len(&self) -> usize {
        self.alph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alph.is_empty()
    }

    pub fn generator(&self, id: GenId) -> &Generator {
        self.alph.generator(id)
    }

    pub fn degree(&self, id: GenId) -> u32 {
        self.alph.degree(id)
    }

    pub fn is_odd(&self, id: GenId) -> bool {
        self.degree(id) % 2 == 1
    }

    pub fn id(&self, name: &str) -> Result<GenId> {
        self.alph.id(name)
    }

    pub fn names(&self) -> Vec<&str> {
        self.alph.generators().iter().map(Generator::name).collect()
    }
}

/// Exponent vector over the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn generator(n: usize, g: GenId) -> Self {
        let mut e = vec![0; n];
        e[g] = 1;
        Monomial(e)
    }

    pub fn degree(&self, gens: &CdgaGenSet) -> u32 {
        self.0.iter().enumerate().map(|(g, &e)| e * gens.degree(g)).sum()
    }

    pub fn wordlength(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Product in normal form with its sign, or `None` when an odd generator repeats.
    pub fn times(&self, other: &Monomial, gens: &CdgaGenSet) -> Option<(bool, Monomial)> {
        let mut negative = false;
        let mut odd_after = 0u32;
        // walk generators from the end: each odd factor of `other` passes the odd
        // factors of `self` with a larger index
        for g in (0..self.0.len()).rev() {
            if gens.is_odd(g) {
                if self.0[g] > 0 && other.0[g] > 0 {
                    return None;
                }
                if other.0[g] > 0 && odd_after % 2 == 1 {
                    negative = !negative;
                }
                odd_after += self.0[g];
            }
        }
        Some((negative, Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())))
    }

    pub fn render(&self, gens: &CdgaGenSet) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| {
                let name = gens.generator(g).name();
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Element of `ΛV`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(Monomial::one(n), Rat::one())
    }

    pub fn generator(n: usize, g: GenId) -> Self {
        Self::monomial(Monomial::generator(n, g), Rat::one())
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, factor: &Rat) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * factor);
        }
    }

    pub fn scaled(&self, factor: &Rat) -> Self {
        let mut p = Self::zero();
        p.add_scaled(self, factor);
        p
    }

    pub fn plus(&self, other: &Polynomial) -> Self {
        let mut p = self.clone();
        p.add_scaled(other, &Rat::one());
        p
    }

    pub fn minus(&self, other: &Polynomial) -> Self {
        let mut p = self.clone();
        p.add_scaled(other, &-Rat::one());
        p
    }

    pub fn times(&self, other: &Polynomial, gens: &CdgaGenSet) -> Self {
        let mut p = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((negative, m)) = m1.times(m2, gens) {
                    let c = c1 * c2;
                    p.add_term(m, if negative { -c } else { c });
                }
            }
        }
        p
    }

    pub fn degree(&self, gens: &CdgaGenSet) -> Grade<u32> {
        let mut degrees = self.terms.keys().map(|m| m.degree(gens));
        let Some(first) = degrees.next() else { return Grade::Zero };
        if degrees.all(|d| d == first) {
            Grade::Pure(first)
        } else {
            Grade::Mixed
        }
    }

    /// Part of word length exactly `n`.
    pub fn wordlength_part(&self, n: u32) -> Self {
        Self::from_terms(self.terms.iter().filter(|(m, _)| m.wordlength() == n).map(|(m, c)| (m.clone(), c.clone())))
    }

    pub fn render(&self, gens: &CdgaGenSet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rat::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mono = m.render(gens);
            if abs.is_one() {
                out.push_str(&mono);
            } else if mono == "1" {
                out.push_str(&abs.to_string());
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

/// `(ΛV, d)` truncated at `max_degree`.
#[derive(Clone, Debug)]
pub struct SullivanAlgebra {
    gens: CdgaGenSet,
    diff: Vec<Polynomial>,
    max_degree: u32,
}

impl fmt::Display for SullivanAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in 0..self.gens.len() {
            let gen = self.gens.generator(g);
            writeln!(f, "d {} = {}   (degree {})", gen.name(), self.diff[g].render(&self.gens), gen.degree())?;
        }
        Ok(())
    }
}

impl SullivanAlgebra {
    /// Builds the algebra, checking degrees and `d² = 0`.
    pub fn new(gens: CdgaGenSet, diff: Vec<(GenId, Polynomial)>, max_degree: u32) -> Result<Self> {
        let s = Self::new_unchecked(gens, diff, max_degree)?;
        if let Some(g) = s.first_nonsquare_zero_generator() {
            return Err(Error::DifferentialNotSquareZero(s.gens.generator(g).name().to_string()));
        }
        Ok(s)
    }

    /// Like [`SullivanAlgebra::new`] but only validates degrees.
    pub fn new_unchecked(gens: CdgaGenSet, diff: Vec<(GenId, Polynomial)>, max_degree: u32) -> Result<Self> {
        let n = gens.len();
        let mut values = vec![Polynomial::zero(); n];
        for (g, p) in diff {
            if g >= n {
                return Err(Error::UnknownGenerator(format!("#{g}")));
            }
            if p.terms().keys().any(|m| m.0.len() != n) {
                return Err(Error::Precondition("monomial length differs from the number of generators".into()));
            }
            values[g] = p;
        }
        for (g, p) in values.iter().enumerate() {
            let gen = gens.generator(g);
            match p.degree(&gens) {
                Grade::Zero => {}
                Grade::Pure(found) if found == gen.degree() + 1 => {}
                Grade::Pure(found) => {
                    return Err(Error::MalformedDifferential {
                        generator: gen.name().to_string(),
                        expected: i64::from(gen.degree()) + 1,
                        found: i64::from(found),
                    })
                }
                Grade::Mixed => return Err(Error::InhomogeneousDifferential(gen.name().to_string())),
            }
        }
        Ok(SullivanAlgebra { gens, diff: values, max_degree })
    }

    pub fn gens(&self) -> &CdgaGenSet {
        &self.gens
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn diff(&self, g: GenId) -> &Polynomial {
        &self.diff[g]
    }

    pub fn generator(&self, g: GenId) -> Polynomial {
        Polynomial::generator(self.gens.len(), g)
    }

    fn check_cap(&self, requested: u32) -> Result<()> {
        if requested > self.max_degree {
            return Err(Error::CapExceeded { requested, cap: self.max_degree });
        }
        Ok(())
    }

    /// `d` on a monomial, as a derivation: `d(g^e) = e g^{e-1} dg` with the
    /// Koszul sign of passing the factors in front.
    pub fn d_monomial(&self, m: &Monomial) -> Polynomial {
        let n = self.gens.len();
        let mut out = Polynomial::zero();
        let mut prefix = Monomial::one(n);
        for g in 0..n {
            let e = m.0[g];
            if e > 0 && !self.diff[g].is_zero() {
                let mut rest = Monomial::one(n);
                rest.0[g] = e - 1;
                rest.0[g + 1..].copy_from_slice(&m.0[g + 1..]);
                let sign = if prefix.degree(&self.gens) % 2 == 1 { -Rat::one() } else { Rat::one() };
                let head = Polynomial::monomial(prefix.clone(), sign * Rat::from_integer(e.into()));
                let term = head.times(&self.diff[g], &self.gens).times(&Polynomial::monomial(rest, Rat::one()), &self.gens);
                out.add_scaled(&term, &Rat::one());
            }
            prefix.0[g] = e;
        }
        out
    }

    pub fn d(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            out.add_scaled(&self.d_monomial(m), c);
        }
        out
    }

    fn first_nonsquare_zero_generator(&self) -> Option<GenId> {
        (0..self.gens.len())
            .filter(|&g| self.gens.degree(g) + 2 <= self.max_degree)
            .find(|&g| !self.d(&self.diff[g]).is_zero())
    }

    /// Monomial basis of `(ΛV)^degree`, in increasing exponent-vector order.
    pub fn monomials(&self, degree: u32) -> Vec<Monomial> {
        let n = self.gens.len();
        let mut out = Vec::new();
        let mut current = vec![0u32; n];
        fn rec(gens: &CdgaGenSet, g: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if g == current.len() {
                if remaining == 0 {
                    out.push(Monomial(current.clone()));
                }
                return;
            }
            let deg = gens.degree(g);
            let max_e = if gens.is_odd(g) { 1.min(remaining / deg) } else { remaining / deg };
            for e in 0..=max_e {
                current[g] = e;
                rec(gens, g + 1, remaining - e * deg, current, out);
            }
            current[g] = 0;
        }
        rec(&self.gens, 0, degree, &mut current, &mut out);
        out.sort();
        out
    }
}

pub fn check_d_squared(s: &SullivanAlgebra) -> bool {
    s.first_nonsquare_zero_generator().is_none()
}

/// `parts[i]` is the component `d_i` of `d g` landing in word length `i + 1`.
pub fn word_length_parts(s: &SullivanAlgebra, g: GenId) -> Vec<Polynomial> {
    let p = s.diff(g);
    let top = p.terms().keys().map(Monomial::wordlength).max().unwrap_or(0);
    (1..=top).map(|n| p.wordlength_part(n)).collect()
}

/// Linear part `d_0` as rows: `rows[g][h]` is the coefficient of `h` in `d_0 g`.
pub fn linear_part(s: &SullivanAlgebra) -> Vec<Vec<Rat>> {
    let n = s.gens().len();
    (0..n)
        .map(|g| {
            let mut row = vec![Rat::zero(); n];
            for (m, c) in s.diff(g).terms() {
                if m.wordlength() == 1 {
                    let h = m.0.iter().position(|&e| e == 1).expect("word length one");
                    row[h] = c.clone();
                }
            }
            row
        })
        .collect()
}

pub fn is_minimal(s: &SullivanAlgebra) -> bool {
    linear_part(s).iter().all(|r| r.iter().all(Zero::is_zero))
}

/// Cohomology in one degree with representative cocycles.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: u32,
    pub dim: usize,
    pub representatives: Vec<Polynomial>,
}

pub fn cohomology(s: &SullivanAlgebra, degree: u32) -> Result<Cohomology> {
    s.check_cap(degree + 1)?;
    let basis = s.monomials(degree);
    let mut index: KeyIndex<Monomial> = KeyIndex::new();
    let mut echelon = TrackedEchelon::new();
    for m in &basis {
        echelon.push(index.encode(s.d_monomial(m).terms()));
    }
    let mut span: KeyedSubspace<Monomial> = KeyedSubspace::new();
    if degree > 0 {
        for m in s.monomials(degree - 1) {
            span.insert(s.d_monomial(&m).terms());
        }
    }
    let boundary_dim = span.dim();
    let mut representatives = Vec::new();
    for rel in echelon.relations() {
        let p = Polynomial::from_terms(rel.iter().map(|(&i, c)| (basis[i].clone(), c.clone())));
        if span.insert(p.terms()) {
            representatives.push(p);
        }
    }
    Ok(Cohomology { degree, dim: echelon.relations().len() - boundary_dim, representatives })
}

fn generators_of_degree(s: &SullivanAlgebra, degree: u32) -> Vec<GenId> {
    (0..s.gens().len()).filter(|&g| s.gens().degree(g) == degree).collect()
}

/// Rank of `d_0` restricted to generators of `degree`.
fn linear_rank(s: &SullivanAlgebra, rows: &[Vec<Rat>], degree: u32) -> usize {
    let mut echelon = TrackedEchelon::new();
    for g in generators_of_degree(s, degree) {
        let v: SparseVec = rows[g].iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
        echelon.push(v);
    }
    echelon.rank()
}

/// `H(V, d_0)` per degree `1..=max_degree`.
pub fn homotopy_groups(s: &SullivanAlgebra, max_degree: u32) -> BTreeMap<u32, usize> {
    let rows = linear_part(s);
    (1..=max_degree)
        .map(|deg| {
            let count = generators_of_degree(s, deg).len();
            let kernel = count - linear_rank(s, &rows, deg);
            let image = if deg >= 2 { linear_rank(s, &rows, deg - 1) } else { 0 };
            (deg, kernel - image)
        })
        .collect()
}

/// Whether generator `g` satisfies `d g ∈ span d(Λ^{≥2} V)`.
pub fn is_spherical_generator(s: &SullivanAlgebra, g: GenId) -> Result<bool> {
    let deg = s.gens().degree(g);
    s.check_cap(deg + 1)?;
    if s.diff(g).is_zero() {
        return Ok(true);
    }
    Ok(decomposable_image(s, deg).contains(s.diff(g).terms()))
}

/// Span of `d m` for monomials `m` of word length at least 2 in `degree`.
fn decomposable_image(s: &SullivanAlgebra, degree: u32) -> KeyedSubspace<Monomial> {
    let mut span = KeyedSubspace::new();
    for m in s.monomials(degree) {
        if m.wordlength() >= 2 {
            span.insert(s.d_monomial(&m).terms());
        }
    }
    span
}

/// Per degree: `{v ∈ V : dv ∈ d(Λ^{≥2}V)}` modulo `im d_0`.
pub fn spherical_cohomology(s: &SullivanAlgebra, max_degree: u32) -> Result<BTreeMap<u32, usize>> {
    s.check_cap(max_degree + 1)?;
    let rows = linear_part(s);
    let mut out = BTreeMap::new();
    for deg in 1..=max_degree {
        let gens = generators_of_degree(s, deg);
        if gens.is_empty() {
            out.insert(deg, 0);
            continue;
        }
        let mut span = decomposable_image(s, deg);
        let base = span.dim();
        for &g in &gens {
            span.insert(s.diff(g).terms());
        }
        let kernel = gens.len() - (span.dim() - base);
        let image = if deg >= 2 { linear_rank(s, &rows, deg - 1) } else { 0 };
        out.insert(deg, kernel - image);
    }
    Ok(out)
}

/// Degree of `n_i` in the dual example: `(i + 1)(deg_a - 1)`.
pub fn dual_example_degree(deg_a: u32, i: u32) -> u32 {
    (i + 1) * (deg_a - 1)
}

/// Generators `a` (odd), `b` of degree `deg_a - 1`, `n_1..n_count` with
/// `d n_1 = a b` and `d n_i = a n_{i-1}`.
pub fn build_dual_example(deg_a: u32, count: u32, max_degree: u32) -> Result<SullivanAlgebra> {
    if deg_a.is_multiple_of(2) || deg_a < 3 {
        return Err(Error::Precondition(format!("deg a must be odd and at least 3, got {deg_a}")));
    }
    if count > 0 {
        let top = dual_example_degree(deg_a, count);
        if top > max_degree {
            return Err(Error::CapExceeded { requested: top, cap: max_degree });
        }
    }
    let mut gens = vec![Generator::new("a", deg_a)?, Generator::new("b", deg_a - 1)?];
    for i in 1..=count {
        gens.push(Generator::new(format!("n{i}"), dual_example_degree(deg_a, i))?);
    }
    let gens = CdgaGenSet::new(gens)?;
    let n = gens.len();
    let a = Polynomial::generator(n, 0);
    let mut diff = Vec::new();
    for i in 1..=count as usize {
        let prev = if i == 1 { 1 } else { i };
        diff.push((i + 1, a.times(&Polynomial::generator(n, prev), &gens)));
    }
    SullivanAlgebra::new(gens, diff, max_degree)
}

/// Cochain algebra of a truncated DGLA together with its bookkeeping.
#[derive(Clone, Debug)]
pub struct CeDual {
    pub algebra: SullivanAlgebra,
    /// Lie basis element dual to each generator, with its degree.
    pub lie_basis: Vec<(u32, LieElement)>,
    /// Cohomology is exact in degrees up to this bound.
    pub reliable_degree: u32,
}

/// One dual generator `v_l` of degree `|l| + 1` for each basis element `l` of
/// `L` in degrees up to `max_degree - 1`;
/// `d v_k = -Σ_l δ_{lk} v_l + ½ Σ_{i,j} (-1)^{|i|} c_{ij}^k v_i v_j`,
/// where `δ l = Σ_k δ_{lk} l_k` and `[l_i, l_j] = Σ_k c_{ij}^k l_k`.
pub fn ce_dualize(d: &Dgla, max_degree: u32) -> Result<CeDual> {
    if max_degree < 2 {
        return Err(Error::Precondition("cap must be at least 2".into()));
    }
    let lie_cap = max_degree - 1;
    if lie_cap > d.max_degree() {
        return Err(Error::CapExceeded { requested: lie_cap, cap: d.max_degree() });
    }
    let alph = d.alphabet();
    // basis per degree with coordinate solvers
    let mut basis: Vec<(u32, LieElement, TensorElement)> = Vec::new();
    let mut by_degree: BTreeMap<u32, (Vec<usize>, KeyIndex<Word>, TrackedEchelon)> = BTreeMap::new();
    for deg in 1..=lie_cap {
        let mut ids = Vec::new();
        let mut index = KeyIndex::new();
        let mut echelon = TrackedEchelon::new();
        for b in d.basis(deg) {
            ids.push(basis.len());
            echelon.push(index.encode(b.tensor.terms()));
            basis.push((deg, b.element(), b.tensor.clone()));
        }
        by_degree.insert(deg, (ids, index, echelon));
    }
    let coords = |deg: u32, t: &TensorElement| -> Result<Vec<(usize, Rat)>> {
        if t.is_zero() {
            return Ok(Vec::new());
        }
        let (ids, index, echelon) = by_degree.get(&deg).ok_or(Error::CapExceeded { requested: deg, cap: lie_cap })?;
        let c = index
            .try_encode(t.terms())
            .and_then(|v| echelon.express(v))
            .ok_or_else(|| Error::IndependenceFailure("element outside the span of its degree basis".into()))?;
        Ok(c.into_iter().map(|(i, x)| (ids[i], x)).collect())
    };

    let gens = CdgaGenSet::new(basis.iter().enumerate().map(|(k, (deg, _, _))| Generator::new(format!("v{k}"), deg + 1)).collect::<Result<Vec<_>>>()?)?;
    let n = gens.len();
    let mut diff = vec![Polynomial::zero(); n];
    let half = ratio(1, 2);
    for (l, (deg, _, t)) in basis.iter().enumerate() {
        if *deg >= 2 {
            for (k, c) in coords(deg - 1, &d.apply_tensor(t))? {
                diff[k].add_term(Monomial::generator(n, l), -c);
            }
        }
    }
    for (i, (di, _, ti)) in basis.iter().enumerate() {
        for (j, (dj, _, tj)) in basis.iter().enumerate() {
            if di + dj > lie_cap {
                continue;
            }
            let sign = if di % 2 == 1 { -half.clone() } else { half.clone() };
            let vij = Polynomial::generator(n, i).times(&Polynomial::generator(n, j), &gens);
            if vij.is_zero() {
                continue;
            }
            for (k, c) in coords(di + dj, &ti.commutator(tj, alph))? {
                diff[k].add_scaled(&vij, &(&sign * c));
            }
        }
    }
    let algebra = SullivanAlgebra::new(gens, diff.into_iter().enumerate().collect(), max_degree)?;
    Ok(CeDual { algebra, lie_basis: basis.into_iter().map(|(deg, e, _)| (deg, e)).collect(), reliable_degree: max_degree - 1 })
}

/// `dim H_{i-1}(W, δ_W)` per cochain degree `i` in `0..=max_degree`, plus one in degree 0.
pub fn generator_homology_shifted(d: &Dgla, max_degree: u32) -> BTreeMap<u32, usize> {
    let lin = crate::dgla::linear_part(d);
    let alph = d.alphabet();
    let rank = |deg: u32| -> usize {
        let mut echelon = TrackedEchelon::new();
        for g in (0..alph.len()).filter(|&g| alph.degree(g) == deg) {
            echelon.push(lin.rows[g].iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect());
        }
        echelon.rank()
    };
    (0..=max_degree)
        .map(|i| {
            if i == 0 {
                return (0, 1);
            }
            let deg = i - 1;
            let count = (0..alph.len()).filter(|&g| alph.degree(g) == deg).count();
            (i, count - rank(deg) - rank(deg + 1))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    fn ex42() -> SullivanAlgebra {
        build_dual_example(3, 3, 14).unwrap()
    }

    #[test]
    fn odd_generators_anticommute() {
        let gens = CdgaGenSet::from_pairs(&[("x", 3), ("y", 5), ("z", 2)]).unwrap();
        let x = Polynomial::generator(3, 0);
        let y = Polynomial::generator(3, 1);
        let z = Polynomial::generator(3, 2);
        assert_eq!(x.times(&y, &gens), y.times(&x, &gens).scaled(&rat(-1)));
        assert!(x.times(&x, &gens).is_zero());
        assert_eq!(x.times(&z, &gens), z.times(&x, &gens));
        assert!(!z.times(&z, &gens).is_zero());
    }

    #[test]
    fn dual_example_shape() {
        let s = ex42();
        let degrees: Vec<u32> = (0..s.gens().len()).map(|g| s.gens().degree(g)).collect();
        assert_eq!(degrees, vec![3, 2, 4, 6, 8]);
        assert!(check_d_squared(&s));
        assert!(is_minimal(&s));
        let parts = word_length_parts(&s, 2);
        assert!(parts[0].is_zero());
        assert_eq!(parts[1].render(s.gens()), "a*b");
    }

    #[test]
    fn dual_example_cohomology() {
        let s = ex42();
        assert_eq!(cohomology(&s, 2).unwrap().dim, 1);
        assert_eq!(cohomology(&s, 5).unwrap().dim, 0);
        assert_eq!(cohomology(&s, 0).unwrap().dim, 1);
    }

    #[test]
    fn dual_example_homotopy_and_spheres() {
        let s = ex42();
        let pi = homotopy_groups(&s, 8);
        let odd: usize = pi.iter().filter(|(d, _)| *d % 2 == 1).map(|(_, n)| n).sum();
        assert_eq!(odd, 1);
        for deg in [2, 4, 6, 8] {
            assert_eq!(pi[&deg], 1);
        }
        let sph = spherical_cohomology(&s, 8).unwrap();
        assert_eq!(sph.values().sum::<usize>(), 2);
        for g in 2..5 {
            assert!(!is_spherical_generator(&s, g).unwrap());
        }
    }

    #[test]
    fn malformed_differential_is_rejected() {
        let gens = CdgaGenSet::from_pairs(&[("n", 4), ("b", 2)]).unwrap();
        let err = SullivanAlgebra::new(gens, vec![(0, Polynomial::generator(2, 1))], 10).unwrap_err();
        assert!(matches!(err, Error::MalformedDifferential { .. }));
    }

    #[test]
    fn zero_differential_cohomology_counts_monomials() {
        let gens = CdgaGenSet::from_pairs(&[("x", 2), ("y", 3)]).unwrap();
        let s = SullivanAlgebra::new(gens, vec![], 12).unwrap();
        assert!(check_d_squared(&s));
        for deg in 0..=10 {
            assert_eq!(cohomology(&s, deg).unwrap().dim, s.monomials(deg).len());
        }
        let sph = spherical_cohomology(&s, 5).unwrap();
        assert_eq!(sph.values().sum::<usize>(), 2);
    }

    #[test]
    fn contractible_pair_has_no_homotopy() {
        let gens = CdgaGenSet::from_pairs(&[("u", 3), ("v", 4)]).unwrap();
        let s = SullivanAlgebra::new(gens, vec![(0, Polynomial::generator(2, 1))], 12).unwrap();
        assert!(homotopy_groups(&s, 8).values().all(|&n| n == 0));
        assert!(!is_minimal(&s));
    }
}
