//! Differential graded Lie algebras whose underlying Lie algebra is free.
//!
//! The differential is given on generators and extended as a derivation of the
//! tensor algebra, which restricts to the Lie derivation
//! `δ[x,y] = [δx,y] + (-1)^{|x|}[x,δy]`. Homology, spherical classes and ideal
//! spans are all computed degree by degree in tensor coordinates.
//!
//! The second half of the module builds the two-generator counter-example:
//! odd generators `a`, `b`, plus even generators `x_j` (odd `j`) with
//! `δx_j = y_j`, each `y_j` having exactly two `b`'s and lying outside the
//! ideal generated by the previous ones.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{complement_pick, KeyIndex, KeyedSubspace, Rat, SparseVec, Subspace, TrackedEchelon, Vector};
use crate::freelie::{expand, Alphabet, BasisElement, FreeLie, GenId, Generator, Grade, LieElement, LieWord, Multidegree, TensorElement, Word};

/// Subspace of the tensor algebra, indexed by words.
pub type TensorSpan = KeyedSubspace<Word>;

/// Free Lie algebra with a degree −1 derivation, truncated at `max_degree`.
#[derive(Clone, Debug)]
pub struct Dgla {
    lie: FreeLie,
    diff: Vec<LieElement>,
    diff_tensor: Vec<TensorElement>,
    max_degree: u32,
}

impl Dgla {
    /// Builds the algebra and checks degrees and `δ² = 0` on every generator under the cap.
    pub fn new(alph: Alphabet, diff: Vec<(GenId, LieElement)>, max_degree: u32) -> Result<Self> {
        let d = Self::new_unchecked(alph, diff, max_degree)?;
        if let Some(g) = d.first_nonsquare_zero_generator() {
            return Err(Error::DifferentialNotSquareZero(d.alphabet().generator(g).name().to_string()));
        }
        Ok(d)
    }

    /// Like [`Dgla::new`] but only validates degrees.
    pub fn new_unchecked(alph: Alphabet, diff: Vec<(GenId, LieElement)>, max_degree: u32) -> Result<Self> {
        let n = alph.len();
        let mut values = vec![LieElement::zero(); n];
        for (g, value) in diff {
            if g >= n {
                return Err(Error::UnknownGenerator(format!("#{g}")));
            }
            values[g] = value;
        }
        let mut tensors = Vec::with_capacity(n);
        for (g, value) in values.iter().enumerate() {
            let gen = alph.generator(g);
            let t = expand(&alph, value);
            match t.degree(&alph) {
                Grade::Zero => {}
                Grade::Pure(found) if found + 1 == gen.degree() => {}
                Grade::Pure(found) => {
                    return Err(Error::MalformedDifferential {
                        generator: gen.name().to_string(),
                        expected: i64::from(gen.degree()) - 1,
                        found: i64::from(found),
                    })
                }
                Grade::Mixed => return Err(Error::InhomogeneousDifferential(gen.name().to_string())),
            }
            tensors.push(t);
        }
        Ok(Dgla { lie: FreeLie::new(alph), diff: values, diff_tensor: tensors, max_degree })
    }

    pub fn with_zero_differential(alph: Alphabet, max_degree: u32) -> Self {
        Self::new_unchecked(alph, Vec::new(), max_degree).expect("zero differential is well formed")
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.lie.alphabet()
    }

    pub fn lie(&self) -> &FreeLie {
        &self.lie
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn diff(&self, g: GenId) -> &LieElement {
        &self.diff[g]
    }

    pub fn diff_tensor(&self, g: GenId) -> &TensorElement {
        &self.diff_tensor[g]
    }

    fn check_cap(&self, requested: u32) -> Result<()> {
        if requested > self.max_degree {
            return Err(Error::CapExceeded { requested, cap: self.max_degree });
        }
        Ok(())
    }

    /// The differential extended to the tensor algebra as a derivation.
    pub fn apply_tensor(&self, t: &TensorElement) -> TensorElement {
        let alph = self.alphabet();
        let mut out = TensorElement::zero();
        for (w, c) in t.terms() {
            let mut prefix_degree = 0u32;
            for (k, &g) in w.iter().enumerate() {
                let image = &self.diff_tensor[g as usize];
                if !image.is_zero() {
                    let coeff = if prefix_degree % 2 == 1 { -c.clone() } else { c.clone() };
                    for (u, cu) in image.terms() {
                        let mut word = Vec::with_capacity(w.len() + u.len() - 1);
                        word.extend_from_slice(&w[..k]);
                        word.extend_from_slice(u);
                        word.extend_from_slice(&w[k + 1..]);
                        out.add_term(word, &coeff * cu);
                    }
                }
                prefix_degree += alph.degree(g as usize);
            }
        }
        out
    }

    pub fn apply(&self, e: &LieElement) -> TensorElement {
        self.apply_tensor(&expand(self.alphabet(), e))
    }

    fn first_nonsquare_zero_generator(&self) -> Option<GenId> {
        (0..self.alphabet().len())
            .filter(|&g| self.alphabet().degree(g) <= self.max_degree)
            .find(|&g| !self.apply_tensor(&self.diff_tensor[g]).is_zero())
    }

    /// Homogeneous basis of `L` in degree `d` (generators above the cap never occur).
    pub fn basis(&self, d: u32) -> Vec<BasisElement> {
        self.lie.basis_degree(d)
    }
}

/// Checks `δ² = 0` on all generators under the cap and the derivation rule on
/// a deterministic sample of bracket pairs.
pub fn check_differential(d: &Dgla) -> bool {
    if d.first_nonsquare_zero_generator().is_some() {
        return false;
    }
    derivation_rule_holds(d, 24)
}

/// Verifies `δ[u,v] = [δu,v] + (-1)^{|u|}[u,δv]` on up to `limit` basis pairs of low degree.
pub fn derivation_rule_holds(d: &Dgla, limit: usize) -> bool {
    let alph = d.alphabet();
    let cap = d.max_degree();
    let mut low: Vec<BasisElement> = Vec::new();
    for deg in 1..=cap / 2 {
        low.extend(d.basis(deg));
    }
    let mut checked = 0;
    for u in &low {
        for v in &low {
            if checked >= limit {
                return true;
            }
            let du = alph.multidegree_degree(&u.multidegree);
            let dv = alph.multidegree_degree(&v.multidegree);
            if du + dv > cap {
                continue;
            }
            checked += 1;
            if !derivation_identity(d, &u.tensor, du, &v.tensor) {
                return false;
            }
        }
    }
    true
}

/// Derivation identity for one pair of homogeneous expansions (`du` is the degree of `u`).
pub fn derivation_identity(d: &Dgla, u: &TensorElement, du: u32, v: &TensorElement) -> bool {
    let alph = d.alphabet();
    let lhs = d.apply_tensor(&u.commutator(v, alph));
    let first = d.apply_tensor(u).commutator(v, alph);
    let second = u.commutator(&d.apply_tensor(v), alph);
    let rhs = if du % 2 == 1 { first.minus(&second) } else { first.plus(&second) };
    lhs == rhs
}

/// Word-length-one part of the differential: `rows[g][h]` is the coefficient of
/// generator `h` in `δ g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearPart {
    pub rows: Vec<Vec<Rat>>,
}

impl LinearPart {
    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Zero::is_zero))
    }
}

pub fn linear_part(d: &Dgla) -> LinearPart {
    let n = d.alphabet().len();
    let rows = (0..n)
        .map(|g| {
            let mut row = vec![Rat::zero(); n];
            for (w, c) in d.diff_tensor(g).terms() {
                if w.len() == 1 {
                    row[w[0] as usize] = c.clone();
                }
            }
            row
        })
        .collect();
    LinearPart { rows }
}

/// Homology in one degree: dimension plus representative cycles.
#[derive(Clone, Debug)]
pub struct Homology {
    pub degree: u32,
    pub dim: usize,
    pub representatives: Vec<LieElement>,
}

/// Cycles of degree `deg`, as Lie elements with their expansions.
fn cycles(d: &Dgla, deg: u32) -> Vec<(LieElement, TensorElement)> {
    let basis = d.basis(deg);
    let mut index: KeyIndex<Word> = KeyIndex::new();
    let mut echelon = TrackedEchelon::new();
    for b in &basis {
        let image = d.apply_tensor(&b.tensor);
        echelon.push(index.encode(image.terms()));
    }
    echelon
        .relations()
        .iter()
        .map(|rel| {
            let element = LieElement::from_terms(rel.iter().map(|(&i, c)| (c.clone(), basis[i].word.clone())).collect());
            let mut tensor = TensorElement::zero();
            for (&i, c) in rel {
                tensor.add_scaled(&basis[i].tensor, c);
            }
            (element, tensor)
        })
        .collect()
}

/// Span of `δ(L_{deg+1})` inside degree `deg`.
fn boundaries(d: &Dgla, deg: u32) -> TensorSpan {
    let mut span = TensorSpan::new();
    for b in d.basis(deg + 1) {
        span.insert(d.apply_tensor(&b.tensor).terms());
    }
    span
}

pub fn homology(d: &Dgla, degree: u32) -> Result<Homology> {
    d.check_cap(degree + 1)?;
    let mut span = boundaries(d, degree);
    let boundary_dim = span.dim();
    let mut representatives = Vec::new();
    let z = cycles(d, degree);
    for (element, tensor) in &z {
        if span.insert(tensor.terms()) {
            representatives.push(element.clone());
        }
    }
    debug_assert_eq!(representatives.len(), z.len() - boundary_dim);
    Ok(Homology { degree, dim: z.len() - boundary_dim, representatives })
}

/// Span of `δ(m)` for `m` running over the word-length ≥ 2 basis of degree `degree + 1`.
pub fn bracket_image_of_diff(d: &Dgla, degree: u32) -> Result<TensorSpan> {
    d.check_cap(degree + 1)?;
    let mut span = TensorSpan::new();
    for b in d.basis(degree + 1) {
        if b.multidegree.iter().sum::<u32>() >= 2 {
            span.insert(d.apply_tensor(&b.tensor).terms());
        }
    }
    Ok(span)
}

/// Whether generator `g` passes the spherical criterion: `δg ∈ δ([L,L])`.
pub fn is_spherical_generator(d: &Dgla, g: GenId) -> Result<bool> {
    let deg = d.alphabet().degree(g);
    let image = d.diff_tensor(g);
    if image.is_zero() {
        return Ok(true);
    }
    let span = bracket_image_of_diff(d, deg - 1)?;
    Ok(span.contains(image.terms()))
}

/// Per-degree dimensions of `ker(δ̄|_V) / im(δ_V)` for degrees `1..=max_degree`.
pub fn spherical_homology(d: &Dgla, max_degree: u32) -> Result<BTreeMap<u32, usize>> {
    d.check_cap(max_degree)?;
    let alph = d.alphabet();
    let lin = linear_part(d);
    let mut out = BTreeMap::new();
    for deg in 1..=max_degree {
        let gens: Vec<GenId> = (0..alph.len()).filter(|&g| alph.degree(g) == deg).collect();
        if gens.is_empty() {
            out.insert(deg, 0);
            continue;
        }
        let mut span = bracket_image_of_diff(d, deg - 1)?;
        let base = span.dim();
        for &g in &gens {
            span.insert(d.diff_tensor(g).terms());
        }
        let kernel = gens.len() - (span.dim() - base);
        // image of the linear part landing in degree `deg`
        let mut lin_image = Subspace::zero(alph.len());
        for g in (0..alph.len()).filter(|&g| alph.degree(g) == deg + 1) {
            lin_image.insert(&Vector::from_rats(lin.rows[g].clone()))?;
        }
        out.insert(deg, kernel - lin_image.dim());
    }
    Ok(out)
}

/// Homogeneous generators of an ideal, expanded, with their degrees.
fn expand_ideal_generators(alph: &Alphabet, gens: &[LieElement]) -> Result<Vec<(u32, TensorElement)>> {
    let mut out = Vec::new();
    for g in gens {
        let t = expand(alph, g);
        match t.degree(alph) {
            Grade::Zero => {}
            Grade::Pure(deg) => out.push((deg, t)),
            Grade::Mixed => return Err(Error::Precondition("ideal generators must be homogeneous".into())),
        }
    }
    Ok(out)
}

/// Bases of the ideal generated by `gens` in every degree `0..=max_degree`.
///
/// Saturation: the degree-`D` part is spanned by the generators of degree `D`
/// and the brackets `[x, i]` with `x` a generator of the alphabet and `i` in
/// the ideal in degree `D - |x|`.
pub fn ideal_bases(lie: &FreeLie, gens: &[LieElement], max_degree: u32) -> Result<Vec<Vec<TensorElement>>> {
    let alph = lie.alphabet();
    let expanded = expand_ideal_generators(alph, gens)?;
    let mut layers: Vec<Vec<TensorElement>> = vec![Vec::new(); max_degree as usize + 1];
    for deg in 1..=max_degree {
        let mut span = TensorSpan::new();
        let mut kept = Vec::new();
        for (gd, t) in &expanded {
            if *gd == deg && span.insert(t.terms()) {
                kept.push(t.clone());
            }
        }
        for x in 0..alph.len() {
            let dx = alph.degree(x);
            if dx >= deg {
                continue;
            }
            let xt = TensorElement::word(vec![x as u16]);
            for t in &layers[(deg - dx) as usize] {
                let c = xt.commutator(t, alph);
                if span.insert(c.terms()) {
                    kept.push(c);
                }
            }
        }
        layers[deg as usize] = kept;
    }
    Ok(layers)
}

pub fn ideal_span_at_degree(lie: &FreeLie, gens: &[LieElement], target_degree: u32) -> Result<TensorSpan> {
    let layers = ideal_bases(lie, gens, target_degree)?;
    let mut span = TensorSpan::new();
    for t in &layers[target_degree as usize] {
        span.insert(t.terms());
    }
    Ok(span)
}

/// Basis of the multidegree-`md` part of the ideal generated by multihomogeneous `gens`.
pub fn ideal_basis_at_multidegree(lie: &FreeLie, gens: &[LieElement], md: &[u32]) -> Result<Vec<TensorElement>> {
    let alph = lie.alphabet();
    let n = alph.len();
    let mut graded: Vec<(Multidegree, TensorElement)> = Vec::new();
    for g in gens {
        let t = expand(alph, g);
        if t.is_zero() {
            continue;
        }
        let m = g
            .common_multidegree(n)
            .ok_or_else(|| Error::Precondition("ideal generators must be multihomogeneous".into()))?;
        graded.push((m, t));
    }
    let mut memo: HashMap<Multidegree, Vec<TensorElement>> = HashMap::new();
    fn rec(
        alph: &Alphabet,
        graded: &[(Multidegree, TensorElement)],
        md: &[u32],
        memo: &mut HashMap<Multidegree, Vec<TensorElement>>,
    ) -> Vec<TensorElement> {
        if let Some(hit) = memo.get(md) {
            return hit.clone();
        }
        let mut span = TensorSpan::new();
        let mut kept = Vec::new();
        for (m, t) in graded {
            if m.as_slice() == md && span.insert(t.terms()) {
                kept.push(t.clone());
            }
        }
        // only descend when some generator still fits below md
        let fits_below = graded.iter().any(|(m, _)| m.iter().zip(md).all(|(a, b)| a <= b) && m.as_slice() != md);
        if fits_below {
            for x in 0..alph.len() {
                if md[x] == 0 {
                    continue;
                }
                let mut prev = md.to_vec();
                prev[x] -= 1;
                let xt = TensorElement::word(vec![x as u16]);
                for t in rec(alph, graded, &prev, memo) {
                    let c = xt.commutator(&t, alph);
                    if span.insert(c.terms()) {
                        kept.push(c);
                    }
                }
            }
        }
        memo.insert(md.to_vec(), kept.clone());
        kept
    }
    Ok(rec(alph, &graded, md, &mut memo))
}

/// Span of `ad^l(a)(y)` over the given elements, in multidegree `md`.
///
/// In the free Lie algebra on two odd generators, the part of the ideal
/// generated by elements with two `b`'s that still has two `b`'s is exactly
/// this span; used to cross-check [`ideal_basis_at_multidegree`].
pub fn closed_form_ad_span(lie: &FreeLie, a: GenId, gens: &[LieElement], md: &[u32]) -> TensorSpan {
    let alph = lie.alphabet();
    let n = alph.len();
    let mut span = TensorSpan::new();
    let a_elem = LieElement::generator(a);
    for y in gens {
        let Some(m) = y.common_multidegree(n) else { continue };
        let compatible = (0..n).all(|i| if i == a { m[i] <= md[i] } else { m[i] == md[i] });
        if !compatible {
            continue;
        }
        let l = (md[a] - m[a]) as usize;
        let e = crate::freelie::ad_power(&a_elem, l, y);
        span.insert(expand(alph, &e).terms());
    }
    span
}

/// Choice of one relation element `y_j`, with the dimension margin that allowed it.
#[derive(Clone, Debug)]
pub struct YChoice {
    pub j: u32,
    pub degree: u32,
    pub y: LieElement,
    pub layer_dim: usize,
    pub ideal_dim: usize,
}

/// Picks `y_j` of multidegree `(a: j, b: 2)` outside the ideal generated by `prior`.
///
/// `y_1` is pinned to `[b,[a,b]]`; later ones use the deterministic complement
/// pick in the coordinates of the layer basis.
pub fn choose_y(lie: &FreeLie, a: GenId, b: GenId, j: u32, prior: &[LieElement]) -> Result<YChoice> {
    let alph = lie.alphabet();
    if j.is_multiple_of(2) {
        return Err(Error::Precondition(format!("y_j needs odd j, got {j}")));
    }
    if !alph.generator(a).is_odd() || !alph.generator(b).is_odd() {
        return Err(Error::Precondition("both generators must have odd degree".into()));
    }
    let mut md = vec![0u32; alph.len()];
    md[a] = j;
    md[b] = 2;
    let degree = alph.multidegree_degree(&md);
    let layer = lie.basis_multidegree(&md);
    let ideal = ideal_basis_at_multidegree(lie, prior, &md)?;

    // coordinates of the ideal inside the layer basis
    let mut index: KeyIndex<Word> = KeyIndex::new();
    let mut coords = TrackedEchelon::new();
    for e in layer.iter() {
        coords.push(index.encode(e.tensor.terms()));
    }
    let mut ideal_sub = Subspace::zero(layer.len());
    for t in &ideal {
        let c = index
            .try_encode(t.terms())
            .and_then(|v| coords.express(v))
            .ok_or_else(|| Error::IndependenceFailure("ideal element outside its layer".into()))?;
        ideal_sub.insert_sparse(c);
    }
    let ideal_dim = ideal_sub.dim();
    let y = if j == 1 {
        let a_e = LieElement::generator(a);
        let b_e = LieElement::generator(b);
        crate::freelie::bracket(&b_e, &crate::freelie::bracket(&a_e, &b_e))
    } else {
        let pick = complement_pick(&ideal_sub, layer.len())
            .map_err(|_| Error::ConstructionContradiction(format!("no room for y_{j} in degree {degree}")))?;
        LieElement::from_terms(
            pick.coords()
                .iter()
                .zip(layer.iter())
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, e)| (c.clone(), e.word.clone()))
                .collect(),
        )
    };
    let yt = expand(alph, &y);
    let inside = index.try_encode(yt.terms()).and_then(|v| coords.express(v)).map(|c| ideal_sub.contains_sparse(&c)).unwrap_or(false);
    if yt.is_zero() || inside {
        return Err(Error::ConstructionContradiction(format!("y_{j} lies in the ideal of the previous relations")));
    }
    Ok(YChoice { j, degree, y, layer_dim: layer.len(), ideal_dim })
}

/// Parameters of the counter-example: odd degrees of `a`, `b`, the odd indices
/// `j` of the added generators and the degree cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleSpec {
    pub deg_a: u32,
    pub deg_b: u32,
    pub js: Vec<u32>,
    pub max_degree: u32,
}

impl CounterexampleSpec {
    /// `count` generators `x_1, x_3, …, x_{2count-1}`.
    pub fn new(deg_a: u32, deg_b: u32, count: u32, max_degree: u32) -> Self {
        CounterexampleSpec { deg_a, deg_b, js: (0..count).map(|k| 2 * k + 1).collect(), max_degree }
    }

    pub fn with_indices(deg_a: u32, deg_b: u32, js: Vec<u32>, max_degree: u32) -> Self {
        CounterexampleSpec { deg_a, deg_b, js, max_degree }
    }

    /// `i_j = 2|b| + j|a|`, the degree of `y_j`.
    pub fn relation_degree(&self, j: u32) -> u32 {
        2 * self.deg_b + j * self.deg_a
    }

    pub fn generator_degree(&self, j: u32) -> u32 {
        self.relation_degree(j) + 1
    }

    pub fn validate(&self) -> Result<()> {
        if self.deg_a.is_multiple_of(2) || self.deg_b.is_multiple_of(2) {
            return Err(Error::Precondition(format!("degrees of a and b must be odd, got {} and {}", self.deg_a, self.deg_b)));
        }
        if self.js.iter().any(|j| j % 2 == 0) {
            return Err(Error::Precondition("indices j must be odd".into()));
        }
        if self.js.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition("indices j must be strictly increasing".into()));
        }
        if let Some(&j) = self.js.last() {
            let need = self.generator_degree(j);
            if need > self.max_degree {
                return Err(Error::CapExceeded { requested: need, cap: self.max_degree });
            }
        }
        Ok(())
    }
}

/// The constructed algebra together with the relation data it was built from.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub spec: CounterexampleSpec,
    pub dgla: Dgla,
    /// Free Lie algebra on `a`, `b` only (ids 0 and 1, as in `dgla`).
    pub base: FreeLie,
    pub choices: Vec<YChoice>,
}

impl Counterexample {
    pub fn ys(&self) -> Vec<LieElement> {
        self.choices.iter().map(|c| c.y.clone()).collect()
    }

    /// Generator id of `x_j` in the algebra.
    pub fn x_id(&self, k: usize) -> GenId {
        2 + k
    }
}

pub fn build_counterexample(spec: &CounterexampleSpec) -> Result<Counterexample> {
    spec.validate()?;
    let base_alph = Alphabet::new(vec![Generator::new("a", spec.deg_a)?, Generator::new("b", spec.deg_b)?])?;
    let base = FreeLie::new(base_alph);
    let mut choices: Vec<YChoice> = Vec::new();
    for &j in &spec.js {
        let prior: Vec<LieElement> = choices.iter().map(|c| c.y.clone()).collect();
        choices.push(choose_y(&base, 0, 1, j, &prior)?);
    }
    let mut gens = vec![Generator::new("a", spec.deg_a)?, Generator::new("b", spec.deg_b)?];
    for &j in &spec.js {
        gens.push(Generator::new(format!("x{j}"), spec.generator_degree(j))?);
    }
    let alph = Alphabet::new(gens)?;
    let diff = choices.iter().enumerate().map(|(k, c)| (2 + k, c.y.clone())).collect();
    let dgla = Dgla::new(alph, diff, spec.max_degree)?;
    Ok(Counterexample { spec: spec.clone(), dgla, base, choices })
}

/// Per-degree dimensions of `L_{⟨a,b⟩} / I(ys)` for degrees `1..=max_degree`.
pub fn quotient_oracle_dims(base: &FreeLie, ys: &[LieElement], max_degree: u32) -> Result<BTreeMap<u32, usize>> {
    let ideal = ideal_bases(base, ys, max_degree)?;
    Ok((1..=max_degree).map(|d| (d, base.dim_degree(d) - ideal[d as usize].len())).collect())
}

/// Outcome of the coformality check, degree by degree.
#[derive(Clone, Debug, Default)]
pub struct CoformalityWitness {
    pub ok: bool,
    /// degree → (dim H(L,δ), dim of the quotient)
    pub dims: BTreeMap<u32, (usize, usize)>,
    pub chain_map_ok: bool,
    pub surjective_ok: bool,
}

/// Checks that sending the generators `kept` to themselves and every other
/// generator to zero defines a chain map `(L, δ) → (L_kept / I(ys), 0)` that
/// is an isomorphism on homology in degrees `1..=max_degree`.
///
/// `kept` must be the leading ids `0..kept_len` and `ys` are elements of the
/// free Lie algebra `base` on those generators.
pub fn coformality_witness(d: &Dgla, base: &FreeLie, ys: &[LieElement], max_degree: u32) -> Result<CoformalityWitness> {
    d.check_cap(max_degree + 1)?;
    let kept = base.alphabet().len();
    for g in 0..kept {
        if base.alphabet().generator(g) != d.alphabet().generator(g) {
            return Err(Error::Precondition("base generators must be the leading generators of the algebra".into()));
        }
    }
    let ideal = ideal_bases(base, ys, max_degree + 1)?;
    let project = |t: &TensorElement| t.restrict(|g| (g as usize) < kept);
    let mut w = CoformalityWitness { ok: true, chain_map_ok: true, surjective_ok: true, ..Default::default() };
    for deg in 1..=max_degree {
        let mut ideal_span = TensorSpan::new();
        for t in &ideal[deg as usize] {
            ideal_span.insert(t.terms());
        }
        // boundaries map into the ideal
        for b in d.basis(deg + 1) {
            let image = project(&d.apply_tensor(&b.tensor));
            if !ideal_span.contains(image.terms()) {
                w.chain_map_ok = false;
            }
        }
        // cycles plus the ideal cover the whole quotient
        let mut cover = ideal_span.clone();
        for (_, t) in cycles(d, deg) {
            cover.insert(project(&t).terms());
        }
        let base_dim = base.dim_degree(deg);
        if cover.dim() != base_dim {
            w.surjective_ok = false;
        }
        let h = homology(d, deg)?.dim;
        let q = base_dim - ideal[deg as usize].len();
        w.dims.insert(deg, (h, q));
        if h != q {
            w.ok = false;
        }
    }
    w.ok = w.ok && w.chain_map_ok && w.surjective_ok;
    Ok(w)
}

/// Everything checked about a constructed counter-example.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub d_squared_zero: bool,
    pub derivation_rule: bool,
    pub minimal: bool,
    /// generators with no letter `x` in their differential
    pub differential_in_base: bool,
    pub connectivity: u32,
    /// Lie degree → dim H(V, δ_V)
    pub generator_homology: BTreeMap<u32, usize>,
    /// generators of odd Lie degree (even-degree homology of the realization)
    pub even_space_homology: usize,
    /// generators of even Lie degree (odd-degree homology of the realization)
    pub odd_space_homology: usize,
    pub spherical: BTreeMap<u32, usize>,
    pub spherical_total: usize,
    /// per x_j: fails the direct spherical criterion
    pub x_nonspherical_direct: Vec<bool>,
    /// per x_j: y_j is outside the ideal of the earlier relations
    pub x_outside_prior_ideal: Vec<bool>,
    /// per x_j: saturation and closed-form ad-span agree on the two-b layer
    pub ideal_closed_form_agrees: Vec<bool>,
    pub homology: BTreeMap<u32, usize>,
    pub quotient_oracle: BTreeMap<u32, usize>,
    pub homology_matches_oracle: bool,
    pub coformality: CoformalityWitness,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.d_squared_zero
            && self.derivation_rule
            && self.minimal
            && self.differential_in_base
            && self.spherical_total == 2
            && self.x_nonspherical_direct.iter().all(|&b| b)
            && self.x_outside_prior_ideal.iter().all(|&b| b)
            && self.ideal_closed_form_agrees.iter().all(|&b| b)
            && self.homology_matches_oracle
            && self.coformality.ok
    }
}

pub fn verify_counterexample(cx: &Counterexample) -> Result<VerificationReport> {
    let d = &cx.dgla;
    let alph = d.alphabet();
    let cap = d.max_degree();
    let lin = linear_part(d);
    let minimal = lin.is_zero();

    let mut generator_homology: BTreeMap<u32, usize> = BTreeMap::new();
    for deg in 1..=cap {
        let gens: Vec<GenId> = (0..alph.len()).filter(|&g| alph.degree(g) == deg).collect();
        if gens.is_empty() {
            continue;
        }
        let mut kernel = TrackedEchelon::new();
        for &g in &gens {
            let row: SparseVec = lin.rows[g].iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
            kernel.push(row);
        }
        let mut image = Subspace::zero(alph.len());
        for g in (0..alph.len()).filter(|&g| alph.degree(g) == deg + 1) {
            image.insert(&Vector::from_rats(lin.rows[g].clone()))?;
        }
        let dim = kernel.relations().len() - image.dim();
        if dim > 0 {
            generator_homology.insert(deg, dim);
        }
    }
    let even_space_homology = generator_homology.iter().filter(|(d, _)| *d % 2 == 1).map(|(_, n)| n).sum();
    let odd_space_homology = generator_homology.iter().filter(|(d, _)| *d % 2 == 0).map(|(_, n)| n).sum();

    let spherical = spherical_homology(d, cap)?;
    let spherical_total = spherical.values().sum();

    let ys = cx.ys();
    let mut x_nonspherical_direct = Vec::new();
    let mut x_outside_prior_ideal = Vec::new();
    let mut ideal_closed_form_agrees = Vec::new();
    for (k, choice) in cx.choices.iter().enumerate() {
        x_nonspherical_direct.push(!is_spherical_generator(d, cx.x_id(k))?);
        let prior = &ys[..k];
        let full = ideal_span_at_degree(&cx.base, prior, choice.degree)?;
        x_outside_prior_ideal.push(!full.contains(expand(cx.base.alphabet(), &choice.y).terms()));
        let md = vec![choice.j, 2];
        let saturated = ideal_basis_at_multidegree(&cx.base, prior, &md)?;
        let closed = closed_form_ad_span(&cx.base, 0, prior, &md);
        let mut sat_span = TensorSpan::new();
        for t in &saturated {
            sat_span.insert(t.terms());
        }
        let agree = saturated.len() == closed.dim() && saturated.iter().all(|t| closed.contains(t.terms()));
        ideal_closed_form_agrees.push(agree && sat_span.dim() == choice.ideal_dim);
    }

    let differential_in_base = (0..alph.len()).all(|g| d.diff_tensor(g).terms().keys().all(|w| w.iter().all(|&l| l < 2)));

    let top = cap - 1;
    let mut homology_dims = BTreeMap::new();
    for deg in 1..=top {
        homology_dims.insert(deg, homology(d, deg)?.dim);
    }
    let quotient_oracle = quotient_oracle_dims(&cx.base, &ys, top)?;
    let homology_matches_oracle = homology_dims == quotient_oracle;
    let coformality = coformality_witness(d, &cx.base, &ys, top)?;

    Ok(VerificationReport {
        d_squared_zero: d.first_nonsquare_zero_generator().is_none(),
        derivation_rule: derivation_rule_holds(d, 24),
        minimal,
        differential_in_base,
        connectivity: cx.spec.deg_a.min(cx.spec.deg_b),
        generator_homology,
        even_space_homology,
        odd_space_homology,
        spherical,
        spherical_total,
        x_nonspherical_direct,
        x_outside_prior_ideal,
        ideal_closed_form_agrees,
        homology: homology_dims,
        quotient_oracle,
        homology_matches_oracle,
        coformality,
    })
}

/// Bracket-tree words of a basis, for display.
pub fn render_words(alph: &Alphabet, words: &[LieWord]) -> Vec<String> {
    words.iter().map(|w| w.render(alph)).collect()
}
