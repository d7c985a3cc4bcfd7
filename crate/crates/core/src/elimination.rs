//! Iterated elimination of generators in free graded Lie algebras.
//!
//! Splitting a generator `x` off a free generating set `Z = ⟨x⟩ ⊕ W` leaves
//! the kernel of `L_Z → L_⟨x⟩`, which is again free on
//! `W ⊕ [x,W] ⊕ ⟨[x,x]⟩` (odd `x`) or `⊕_j ad^j(x)(W)` (even `x`). States are
//! truncated by caps on degree, word length and optionally the multiplicity
//! of one ambient generator.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactlin::KeyedSubspace;
use crate::freelie::{bracket, expand, Alphabet, FreeLie, GenId, Generator, LieElement, LieWord, Multidegree, TensorElement, Word};

/// How an odd generator `x` is split off.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OddSplit {
    /// New set `W ⊕ [x,W] ⊕ ⟨[x,x]⟩`, kernel of the map onto the abelian line `⟨x⟩`.
    #[default]
    KeepSquare,
    /// New set `⊕_j ad^j(x)(W)`, kernel of the map onto the free algebra `⟨x, [x,x]⟩`.
    FreeQuotient,
}

/// Truncation caps of an elimination run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_degree: u32,
    pub max_wordlength: u32,
    /// At most this many occurrences of the given ambient generator.
    pub max_count: Option<(GenId, u32)>,
}

impl Caps {
    pub fn new(max_degree: u32, max_wordlength: u32) -> Self {
        Caps { max_degree, max_wordlength, max_count: None }
    }

    pub fn with_count(mut self, gen: GenId, count: u32) -> Self {
        self.max_count = Some((gen, count));
        self
    }

    /// Whether an ambient multidegree lies within the caps.
    pub fn admits(&self, alph: &Alphabet, md: &[u32]) -> bool {
        alph.multidegree_degree(md) <= self.max_degree
            && md.iter().sum::<u32>() <= self.max_wordlength
            && self.max_count.is_none_or(|(g, c)| md[g] <= c)
    }
}

/// A generator of the current free generating set.
#[derive(Clone, Debug)]
pub struct Labeled {
    pub label: String,
    pub element: LieElement,
    pub tensor: TensorElement,
    pub multidegree: Multidegree,
    pub degree: u32,
    /// Stage at which the element entered the generating set.
    pub born: usize,
    /// Word lengths of the two factors when the element is a bracket `[x, w]`.
    pub factors: Option<(u32, u32)>,
}

impl Labeled {
    fn new(alph: &Alphabet, element: LieElement, born: usize, factors: Option<(u32, u32)>) -> Result<Self> {
        let tensor = expand(alph, &element);
        let multidegree = element
            .common_multidegree(alph.len())
            .ok_or_else(|| Error::Precondition(format!("`{}` is not multihomogeneous", element.render(alph))))?;
        let degree = alph.multidegree_degree(&multidegree);
        Ok(Labeled { label: element.render(alph), element, tensor, multidegree, degree, born, factors })
    }

    pub fn wordlength(&self) -> u32 {
        self.multidegree.iter().sum()
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// One stage `Z_i` of the elimination, numbered by the count of splits performed.
#[derive(Clone, Debug)]
pub struct EliminationState {
    alph: Alphabet,
    pub stage: usize,
    pub current: Vec<Labeled>,
    pub history: Vec<Labeled>,
    pub caps: Caps,
    pub odd_split: OddSplit,
    /// Set when the last split produced no new element within the caps.
    pub cap_exhausted: bool,
}

impl EliminationState {
    /// Stage 0 with the generators of the ambient alphabet.
    pub fn initial(alph: &Alphabet, caps: Caps) -> Result<Self> {
        let elements = (0..alph.len()).map(LieElement::generator).collect();
        Self::from_elements(alph, elements, caps)
    }

    /// Stage 0 with an arbitrary independent set of multihomogeneous elements.
    pub fn from_elements(alph: &Alphabet, elements: Vec<LieElement>, caps: Caps) -> Result<Self> {
        if caps.max_degree == 0 || caps.max_wordlength == 0 {
            return Err(Error::Precondition("caps must be positive".into()));
        }
        let current = elements.into_iter().map(|e| Labeled::new(alph, e, 0, None)).collect::<Result<Vec<_>>>()?;
        check_independent(alph, &current)?;
        Ok(EliminationState { alph: alph.clone(), stage: 0, current, history: Vec::new(), caps, odd_split: OddSplit::default(), cap_exhausted: false })
    }

    pub fn with_odd_split(mut self, rule: OddSplit) -> Self {
        self.odd_split = rule;
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alph
    }

    pub fn labels(&self) -> Vec<&str> {
        self.current.iter().map(|g| g.label.as_str()).collect()
    }

    pub fn find(&self, label: &str) -> Option<&Labeled> {
        self.current.iter().find(|g| g.label == label)
    }

    /// Label of the unique current generator of the given ambient multidegree.
    pub fn label_of_multidegree(&self, md: &[u32]) -> Option<&str> {
        let mut hits = self.current.iter().filter(|g| g.multidegree == md);
        match (hits.next(), hits.next()) {
            (Some(g), None) => Some(&g.label),
            _ => None,
        }
    }

    /// Free alphabet with one abstract generator per current element.
    pub fn abstract_alphabet(&self) -> Result<Alphabet> {
        Alphabet::new(self.current.iter().map(|g| Generator::new(g.label.clone(), g.degree)).collect::<Result<Vec<_>>>()?)
    }
}

fn check_independent(alph: &Alphabet, gens: &[Labeled]) -> Result<()> {
    let mut span: KeyedSubspace<Word> = KeyedSubspace::new();
    for g in gens {
        if !span.insert(g.tensor.terms()) {
            return Err(Error::IndependenceFailure(format!("`{}` depends on the other generators", g.element.render(alph))));
        }
    }
    Ok(())
}

/// Splits the generator labeled `pick` off the current generating set.
pub fn eliminate_step(state: &EliminationState, pick: &str) -> Result<EliminationState> {
    let alph = &state.alph;
    let idx = state.current.iter().position(|g| g.label == pick).ok_or_else(|| Error::UnknownGenerator(pick.to_string()))?;
    let x = state.current[idx].clone();
    let w: Vec<Labeled> = state.current.iter().enumerate().filter(|&(i, _)| i != idx).map(|(_, g)| g.clone()).collect();
    let stage = state.stage + 1;
    let fits = |md: &[u32]| state.caps.admits(alph, md);
    let sum = |u: &[u32], v: &[u32]| u.iter().zip(v).map(|(p, q)| p + q).collect::<Multidegree>();

    let mut next = w.clone();
    let mut added = 0;
    if x.is_odd() && state.odd_split == OddSplit::KeepSquare {
        for g in &w {
            if fits(&sum(&x.multidegree, &g.multidegree)) {
                next.push(Labeled::new(alph, bracket(&x.element, &g.element), stage, Some((x.wordlength(), g.wordlength())))?);
                added += 1;
            }
        }
        if fits(&sum(&x.multidegree, &x.multidegree)) {
            next.push(Labeled::new(alph, bracket(&x.element, &x.element), stage, Some((x.wordlength(), x.wordlength())))?);
            added += 1;
        }
    } else {
        let mut layer = w.clone();
        loop {
            let mut grown = Vec::new();
            for g in &layer {
                if fits(&sum(&x.multidegree, &g.multidegree)) {
                    grown.push(Labeled::new(alph, bracket(&x.element, &g.element), stage, Some((x.wordlength(), g.wordlength())))?);
                }
            }
            if grown.is_empty() {
                break;
            }
            added += grown.len();
            next.extend(grown.iter().cloned());
            layer = grown;
        }
    }
    check_independent(alph, &next)?;
    let mut history = state.history.clone();
    history.push(x);
    Ok(EliminationState { alph: alph.clone(), stage, current: next, history, caps: state.caps.clone(), odd_split: state.odd_split, cap_exhausted: added == 0 })
}

/// Dimensions on both sides of the short exact sequence in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesRow {
    pub degree: u32,
    pub before: usize,
    pub after: usize,
    pub quotient: usize,
    /// Rank of the abstract bases of both states after substituting the generators.
    pub concrete_before: usize,
    pub concrete_after: usize,
}

impl SesRow {
    pub fn additive(&self) -> bool {
        self.before == self.after + self.quotient
    }

    pub fn embedded(&self) -> bool {
        self.concrete_before == self.before && self.concrete_after == self.after
    }
}

/// Result of [`ses_dimension_check`]; rows are sums over the ambient
/// multidegrees admitted by the caps.
#[derive(Clone, Debug)]
pub struct EliminationReport {
    pub stage_before: usize,
    pub stage_after: usize,
    pub rows: Vec<SesRow>,
}

impl EliminationReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.additive() && r.embedded())
    }

    pub fn failures(&self) -> Vec<u32> {
        self.rows.iter().filter(|r| !(r.additive() && r.embedded())).map(|r| r.degree).collect()
    }
}

/// Per ambient multidegree: dimension of the free Lie algebra on the state's
/// generators, and the rank of its basis mapped into the ambient algebra.
fn state_dims(state: &EliminationState, max_degree: u32) -> Result<BTreeMap<Multidegree, (usize, usize)>> {
    let alph = &state.alph;
    let abstract_alph = state.abstract_alphabet()?;
    let lie = FreeLie::new(abstract_alph);
    let mut per_md: BTreeMap<Multidegree, (usize, KeyedSubspace<Word>)> = BTreeMap::new();
    let mut admitted = Vec::new();
    collect_admitted(state, max_degree, 0, &mut vec![0; state.current.len()], &mut vec![0; alph.len()], &mut admitted);
    for (m, ambient) in admitted {
        let entry = per_md.entry(ambient).or_insert_with(|| (0, KeyedSubspace::new()));
        for b in lie.basis_multidegree(&m).iter() {
            entry.0 += 1;
            let t = substitute(alph, &b.word, &state.current);
            entry.1.insert(t.terms());
        }
    }
    Ok(per_md.into_iter().map(|(md, (n, span))| (md, (n, span.dim()))).collect())
}

/// Abstract multidegrees whose ambient image stays within the caps.
fn collect_admitted(
    state: &EliminationState,
    max_degree: u32,
    k: usize,
    m: &mut Multidegree,
    ambient: &mut Multidegree,
    out: &mut Vec<(Multidegree, Multidegree)>,
) {
    if k == m.len() {
        if m.iter().any(|&c| c > 0) {
            out.push((m.clone(), ambient.clone()));
        }
        return;
    }
    let alph = &state.alph;
    let g = &state.current[k].multidegree;
    loop {
        collect_admitted(state, max_degree, k + 1, m, ambient, out);
        for (slot, v) in ambient.iter_mut().zip(g) {
            *slot += v;
        }
        m[k] += 1;
        if !state.caps.admits(alph, ambient) || alph.multidegree_degree(ambient) > max_degree {
            break;
        }
    }
    for (slot, v) in ambient.iter_mut().zip(g) {
        *slot -= m[k] * v;
    }
    m[k] = 0;
}

fn substitute(alph: &Alphabet, w: &LieWord, gens: &[Labeled]) -> TensorElement {
    match w {
        LieWord::Leaf(k) => gens[*k].tensor.clone(),
        LieWord::Node(l, r) => substitute(alph, l, gens).commutator(&substitute(alph, r, gens), alph),
    }
}

/// Checks `dim L_{Z_i} = dim L_{Z_{i+1}} + dim Q` in every degree up to the cap,
/// restricted to the ambient multidegrees the caps keep complete. `Q` is the
/// quotient matching the state's [`OddSplit`] rule: `⟨x⟩`, or `⟨x, [x,x]⟩`
/// for an odd `x` under [`OddSplit::FreeQuotient`].
pub fn ses_dimension_check(before: &EliminationState, after: &EliminationState, x: &LieElement) -> Result<EliminationReport> {
    let alph = &before.alph;
    let max_degree = before.caps.max_degree;
    let x_md = x
        .common_multidegree(alph.len())
        .ok_or_else(|| Error::Precondition("split element must be multihomogeneous".into()))?;
    let x_deg = alph.multidegree_degree(&x_md);
    let dims_before = state_dims(before, max_degree)?;
    let dims_after = state_dims(after, max_degree)?;
    let mut quotient: BTreeMap<Multidegree, usize> = BTreeMap::new();
    quotient.insert(x_md.clone(), 1);
    if x_deg % 2 == 1 && before.odd_split == OddSplit::FreeQuotient {
        quotient.insert(x_md.iter().map(|v| 2 * v).collect(), 1);
    }

    let mut rows: BTreeMap<u32, SesRow> = BTreeMap::new();
    fn row<'a>(rows: &'a mut BTreeMap<u32, SesRow>, alph: &Alphabet, md: &[u32]) -> &'a mut SesRow {
        let degree = alph.multidegree_degree(md);
        rows.entry(degree).or_insert(SesRow { degree, before: 0, after: 0, quotient: 0, concrete_before: 0, concrete_after: 0 })
    }
    for (md, (n, rank)) in &dims_before {
        let r = row(&mut rows, alph, md);
        r.before += n;
        r.concrete_before += rank;
    }
    for (md, (n, rank)) in &dims_after {
        let r = row(&mut rows, alph, md);
        r.after += n;
        r.concrete_after += rank;
    }
    for (md, n) in &quotient {
        if before.caps.admits(alph, md) {
            row(&mut rows, alph, md).quotient += n;
        }
    }
    Ok(EliminationReport { stage_before: before.stage, stage_after: after.stage, rows: rows.into_values().collect() })
}

/// One element of the two-`b` basis produced by the elimination schedule.
#[derive(Clone, Debug)]
pub struct ScheduledElement {
    pub element: LieElement,
    pub tensor: TensorElement,
    pub wordlength: u32,
    /// Word lengths `(k, n-k)` of the two factors.
    pub factors: (u32, u32),
}

/// Runs the schedule `a`, `[a,a]`, `b`, `ad^i(a)(b)` (`i ≥ 1`) and returns the
/// generators with exactly two `b`'s and word length at most `max_wl`, ordered
/// by word length and then by the word length of the first factor.
pub fn wlb2_schedule_basis(a: &Generator, b: &Generator, max_wl: u32) -> Result<Vec<ScheduledElement>> {
    Ok(wlb2_schedule(a, b, max_wl)?.0)
}

/// Like [`wlb2_schedule_basis`], also returning every intermediate state.
pub fn wlb2_schedule(a: &Generator, b: &Generator, max_wl: u32) -> Result<(Vec<ScheduledElement>, Vec<EliminationState>)> {
    if !a.is_odd() || !b.is_odd() {
        return Err(Error::Precondition(format!("degrees of a and b must be odd, got {} and {}", a.degree(), b.degree())));
    }
    if max_wl < 2 {
        return Err(Error::Precondition(format!("max_wl must be at least 2, got {max_wl}")));
    }
    let alph = Alphabet::new(vec![a.clone(), b.clone()])?;
    let caps = Caps::new(max_wl * a.degree().max(b.degree()), max_wl).with_count(1, 2);
    let mut states = vec![EliminationState::initial(&alph, caps)?];
    let step = |states: &mut Vec<EliminationState>, md: [u32; 2]| -> Result<()> {
        let last = states.last().expect("non-empty");
        let label = last
            .label_of_multidegree(&md)
            .ok_or_else(|| Error::ConstructionContradiction(format!("no unique generator of multidegree {md:?}")))?
            .to_string();
        let next = eliminate_step(last, &label)?;
        states.push(next);
        Ok(())
    };
    step(&mut states, [1, 0])?;
    step(&mut states, [2, 0])?;
    step(&mut states, [0, 1])?;
    for i in 1..=max_wl.saturating_sub(2) {
        step(&mut states, [i, 1])?;
    }
    let last = states.last().expect("non-empty");
    let mut out: Vec<ScheduledElement> = last
        .current
        .iter()
        .filter(|g| g.multidegree[1] == 2)
        .map(|g| {
            let factors = g.factors.expect("two-b generators are brackets");
            ScheduledElement { element: g.element.clone(), tensor: g.tensor.clone(), wordlength: g.wordlength(), factors }
        })
        .collect();
    out.sort_by_key(|e| (e.wordlength, e.factors.0));
    Ok((out, states))
}
