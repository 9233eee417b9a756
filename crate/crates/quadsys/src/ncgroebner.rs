//! Noncommutative Gröbner bases in free associative algebras.
//!
//! Words are ordered by degree, then lexicographically by letter index.
//! Normal forms always rewrite the highest reducible term, using the rule
//! with the lowest leading monomial at its leftmost occurrence.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::scalar::{parse_rational, Field, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown letter {0:?}")]
    UnknownLetter(char),
    #[error("the quotient is infinite dimensional")]
    Infinite,
}

/// A word in the generators, compared by degree then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(parts: &[&[u8]]) -> Self {
        Word(parts.iter().flat_map(|p| p.iter().copied()).collect())
    }

    /// Positions where `sub` occurs.
    pub fn occurrences(&self, sub: &[u8]) -> Vec<usize> {
        if sub.len() > self.0.len() {
            return Vec::new();
        }
        (0..=self.0.len() - sub.len()).filter(|&p| &self.0[p..p + sub.len()] == sub).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered letters of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet(pub Vec<char>);

impl Alphabet {
    /// The first `n` lowercase letters.
    pub fn standard(n: usize) -> Self {
        Alphabet((0..n as u8).map(|i| (b'a' + i) as char).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index(&self, c: char) -> Result<u8, GroebnerError> {
        self.0.iter().position(|&x| x == c).map(|i| i as u8).ok_or(GroebnerError::UnknownLetter(c))
    }

    pub fn parse_word(&self, s: &str) -> Result<Word, GroebnerError> {
        let mut out = Vec::new();
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let l = self.index(chars[i])?;
            i += 1;
            let mut exp = 1usize;
            if i < chars.len() && chars[i] == '^' {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                exp = chars[start..j].iter().collect::<String>().parse().map_err(|_| GroebnerError::Parse(s.into()))?;
                i = j;
            }
            out.extend(std::iter::repeat(l).take(exp));
        }
        Ok(Word(out))
    }

    /// Writes a word with exponents, e.g. `a^2ba`; the empty word is `1`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut s = String::new();
        let mut i = 0;
        while i < w.0.len() {
            let mut j = i;
            while j < w.0.len() && w.0[j] == w.0[i] {
                j += 1;
            }
            s.push(self.0[w.0[i] as usize]);
            if j - i > 1 {
                s.push_str(&format!("^{}", j - i));
            }
            i = j;
        }
        s
    }

    /// Parses a signed sum such as `aba^2 + a^2ba - a`, `+abcd -dcba -c`
    /// or `a^3bc + 1/2 c^2 - 1/2*b^2`. A bare number is a multiple of 1.
    pub fn parse_poly(&self, s: &str) -> Result<NCPoly<Rational>, GroebnerError> {
        let mut p = NCPoly::zero();
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut i = 0;
        if chars.is_empty() {
            return Err(GroebnerError::Parse(s.into()));
        }
        while i < chars.len() {
            let mut sign = Rational::from_integer(1.into());
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                i += 1;
            }
            let coeff = if i > start {
                parse_rational(&chars[start..i].iter().collect::<String>()).ok_or_else(|| GroebnerError::Parse(s.into()))?
            } else {
                Rational::from_integer(1.into())
            };
            if i < chars.len() && chars[i] == '*' {
                i += 1;
            }
            let wstart = i;
            while i < chars.len() && chars[i] != '+' && chars[i] != '-' {
                i += 1;
            }
            let wtext: String = chars[wstart..i].iter().collect();
            if wtext.is_empty() && start == i {
                return Err(GroebnerError::Parse(s.into()));
            }
            let w = if wtext.is_empty() || wtext == "1" { Word::empty() } else { self.parse_word(&wtext)? };
            p.add_term(w, sign * coeff);
        }
        Ok(p)
    }

    /// Writes a polynomial leading term first.
    pub fn format_poly<F: Field>(&self, p: &NCPoly<F>) -> String {
        self.format_terms(p.terms.iter().rev())
    }

    /// Writes a polynomial lowest term first.
    pub fn format_poly_ascending<F: Field>(&self, p: &NCPoly<F>) -> String {
        self.format_terms(p.terms.iter())
    }

    fn format_terms<'a, F: Field + 'a>(&self, terms: impl Iterator<Item = (&'a Word, &'a F)>) -> String {
        let mut s = String::new();
        for (k, (w, c)) in terms.enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            let needs_parens = mag.contains('+') || mag.contains('-');
            let mag = if needs_parens { format!("({mag})") } else { mag };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let one = mag == "1";
            if w.is_empty() {
                s.push_str(&mag);
            } else {
                if !one {
                    s.push_str(&mag);
                    s.push(' ');
                }
                s.push_str(&self.format_word(w));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// A polynomial in the free associative algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct NCPoly<F> {
    pub terms: BTreeMap<Word, F>,
}

impl<F: Field> NCPoly<F> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn monomial(w: Word, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn one() -> Self {
        Self::monomial(Word::empty(), F::one())
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
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

    pub fn leading(&self) -> Option<(&Word, &F)> {
        self.terms.iter().next_back()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn degree(&self) -> usize {
        self.leading_word().map_or(0, Word::len)
    }

    /// True when every term has the same degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Word::len);
        match it.next() {
            Some(d) => it.all(|e| e == d),
            None => true,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut p = Self::zero();
        for (w, x) in &self.terms {
            p.add_term(w.clone(), x.clone() * c.clone());
        }
        p
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), -c.clone());
        }
        p
    }

    /// `c · u · self · v`.
    pub fn sandwich(&self, c: &F, u: &[u8], v: &[u8]) -> Self {
        let mut p = Self::zero();
        for (w, x) in &self.terms {
            p.add_term(Word::concat(&[u, &w.0, v]), x.clone() * c.clone());
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                p.add_term(Word::concat(&[&w1.0, &w2.0]), c1.clone() * c2.clone());
            }
        }
        p
    }

    /// Coefficients mapped into another field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> NCPoly<G> {
        let mut p = NCPoly::zero();
        for (w, c) in &self.terms {
            p.add_term(w.clone(), f(c));
        }
        p
    }
}

/// Leading-monomial index over a list of monic rules.
pub struct RuleSet<'a, F> {
    rules: &'a [NCPoly<F>],
    by_lm: HashMap<&'a [u8], usize>,
    lengths: Vec<usize>,
}

impl<'a, F: Field> RuleSet<'a, F> {
    pub fn new(rules: &'a [NCPoly<F>]) -> Self {
        let mut by_lm: HashMap<&[u8], usize> = HashMap::new();
        let mut lengths = Vec::new();
        for (i, r) in rules.iter().enumerate() {
            if let Some(w) = r.leading_word() {
                by_lm.entry(w.0.as_slice()).or_insert(i);
                lengths.push(w.len());
            }
        }
        lengths.sort_unstable();
        lengths.dedup();
        RuleSet { rules, by_lm, lengths }
    }

    /// The rule with the lowest leading monomial dividing `w`, with its
    /// leftmost position. `skip` excludes one rule index.
    pub fn find(&self, w: &[u8], skip: Option<usize>) -> Option<(usize, usize)> {
        for &len in &self.lengths {
            if len > w.len() {
                break;
            }
            let mut best: Option<(&[u8], usize, usize)> = None;
            for p in 0..=w.len() - len {
                let sub = &w[p..p + len];
                let Some(&i) = self.by_lm.get(sub) else { continue };
                let i = if Some(i) == skip { self.alternative(sub, i) } else { Some(i) };
                let Some(i) = i else { continue };
                if best.is_none_or(|(b, _, _)| sub < b) {
                    best = Some((sub, i, p));
                }
            }
            if let Some((_, i, p)) = best {
                return Some((i, p));
            }
        }
        None
    }

    fn alternative(&self, lm: &[u8], skip: usize) -> Option<usize> {
        self.rules.iter().enumerate().position(|(j, r)| j != skip && r.leading_word().is_some_and(|w| w.0 == lm))
    }

    pub fn rules(&self) -> &'a [NCPoly<F>] {
        self.rules
    }
}

/// One rewriting step `c · u · g_k · v`.
#[derive(Clone, Debug)]
pub struct ReductionStep<F> {
    pub coeff: F,
    pub left: Word,
    pub rule: usize,
    pub right: Word,
}

/// A normal form with the steps that produced it.
#[derive(Clone, Debug)]
pub struct Reduction<F> {
    pub remainder: NCPoly<F>,
    pub steps: Vec<ReductionStep<F>>,
}

fn reduce_impl<F: Field>(f: &NCPoly<F>, rs: &RuleSet<'_, F>, skip: Option<usize>, audit: bool) -> Reduction<F> {
    let mut p = f.clone();
    let mut steps = Vec::new();
    let mut upper: Option<Word> = None;
    loop {
        let mut found = None;
        let iter: Box<dyn Iterator<Item = (&Word, &F)>> = match &upper {
            Some(u) => Box::new(p.terms.range(..=u.clone()).rev()),
            None => Box::new(p.terms.iter().rev()),
        };
        for (w, c) in iter {
            if let Some((k, pos)) = rs.find(&w.0, skip) {
                found = Some((w.clone(), c.clone(), k, pos));
                break;
            }
        }
        let Some((w, c, k, pos)) = found else { break };
        let rule = &rs.rules()[k];
        let (lm, lc) = rule.leading().expect("nonzero rule");
        let coeff = c * lc.inv().expect("nonzero leading coefficient");
        let left = &w.0[..pos];
        let right = &w.0[pos + lm.len()..];
        for (rw, rc) in &rule.terms {
            p.add_term(Word::concat(&[left, &rw.0, right]), -(coeff.clone() * rc.clone()));
        }
        if audit {
            steps.push(ReductionStep { coeff, left: Word(left.to_vec()), rule: k, right: Word(right.to_vec()) });
        }
        upper = Some(w);
    }
    Reduction { remainder: p, steps }
}

/// Normal form of `f` with respect to `rules`.
pub fn normal_form<F: Field>(f: &NCPoly<F>, rules: &[NCPoly<F>]) -> NCPoly<F> {
    reduce_impl(f, &RuleSet::new(rules), None, false).remainder
}

/// Normal form together with the cofactors used.
pub fn normal_form_audited<F: Field>(f: &NCPoly<F>, rules: &[NCPoly<F>]) -> Reduction<F> {
    reduce_impl(f, &RuleSet::new(rules), None, true)
}

/// Checks `f − r = Σ c·u·g·v` exactly for a recorded reduction.
pub fn audit_reduction<F: Field>(f: &NCPoly<F>, red: &Reduction<F>, rules: &[NCPoly<F>]) -> bool {
    let mut acc = f.sub(&red.remainder);
    for s in &red.steps {
        acc = acc.sub(&rules[s.rule].sandwich(&s.coeff, &s.left.0, &s.right.0));
    }
    acc.is_zero()
}

/// How a composition arises from a pair of rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompositionKind {
    /// A proper suffix of `LM(g)` of this length is a prefix of `LM(h)`.
    Overlap(usize),
    /// `LM(h)` occurs inside `LM(g)` at this position.
    Inclusion(usize),
}

/// All compositions of the ordered pair `(g, h)`: overlaps where a proper
/// suffix of `LM(g)` is a proper prefix of `LM(h)`, and inclusions of
/// `LM(h)` in `LM(g)`.
pub fn compositions<F: Field>(g: &NCPoly<F>, h: &NCPoly<F>) -> Vec<(CompositionKind, NCPoly<F>)> {
    let (Some((u, uc)), Some((v, vc))) = (g.leading(), h.leading()) else { return Vec::new() };
    let one = F::one();
    let gi = g.scale(&uc.inv().expect("nonzero"));
    let hi = h.scale(&vc.inv().expect("nonzero"));
    let mut out = Vec::new();
    let (u, v) = (&u.0, &v.0);
    for k in 1..u.len().min(v.len()) {
        if u[u.len() - k..] == v[..k] {
            let c = gi.sandwich(&one, &[], &v[k..]).sub(&hi.sandwich(&one, &u[..u.len() - k], &[]));
            out.push((CompositionKind::Overlap(k), c));
        }
    }
    if !std::ptr::eq(g, h) && v.len() <= u.len() {
        for p in Word(u.clone()).occurrences(v) {
            let c = gi.sub(&hi.sandwich(&one, &u[..p], &u[p + v.len()..]));
            out.push((CompositionKind::Inclusion(p), c));
        }
    }
    out
}

fn sort_by_lm<F: Field>(v: &mut [NCPoly<F>]) {
    v.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()));
}

/// Self-reduction to a fixed point: sorts by leading monomial, reduces
/// each element against its predecessors, then fully reduces every element
/// against all others. Returns monic rules sorted by leading monomial.
pub fn self_reduce<F: Field>(gens: &[NCPoly<F>]) -> Vec<NCPoly<F>> {
    let mut v: Vec<NCPoly<F>> = gens.iter().filter(|p| !p.is_zero()).map(NCPoly::monic).collect();
    sort_by_lm(&mut v);
    loop {
        let mut kept: Vec<NCPoly<F>> = Vec::with_capacity(v.len());
        for p in &v {
            let r = normal_form(p, &kept);
            if !r.is_zero() {
                kept.push(r.monic());
            }
        }
        sort_by_lm(&mut kept);
        let mut changed = kept.len() != v.len() || kept.iter().zip(&v).any(|(a, b)| a != b);
        let mut i = 0;
        while i < kept.len() {
            let r = {
                let rs = RuleSet::new(&kept);
                reduce_impl(&kept[i], &rs, Some(i), false).remainder
            };
            if r != kept[i] {
                changed = true;
                if r.is_zero() {
                    kept.remove(i);
                    continue;
                }
                kept[i] = r.monic();
            }
            i += 1;
        }
        sort_by_lm(&mut kept);
        v = kept;
        if !changed {
            return v;
        }
    }
}

/// Whether completion finished or stopped at a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completion {
    Complete,
    Truncated { degree_bound: usize },
}

/// Counts recorded for one round of completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundLog {
    pub rules: usize,
    pub compositions: usize,
    pub after_self_reduction: usize,
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis<F> {
    pub rules: Vec<NCPoly<F>>,
    pub status: Completion,
    pub rounds: Vec<RoundLog>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn is_complete(&self) -> bool {
        self.status == Completion::Complete
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.rules.iter().filter_map(|r| r.leading_word().cloned()).collect()
    }

    pub fn normal_form(&self, f: &NCPoly<F>) -> NCPoly<F> {
        normal_form(f, &self.rules)
    }
}

/// Distinct nonzero monic normal forms of all compositions of the rules,
/// pairs taken in lexicographic order of their indices. Compositions of
/// degree above `bound` are skipped and reported through the flag.
pub fn reduced_compositions<F: Field>(rules: &[NCPoly<F>], bound: Option<usize>) -> (Vec<NCPoly<F>>, bool) {
    let rs = RuleSet::new(rules);
    let mut out: Vec<NCPoly<F>> = Vec::new();
    let mut seen: HashMap<String, ()> = HashMap::new();
    let mut skipped = false;
    for g in rules {
        for h in rules {
            for (_, c) in compositions(g, h) {
                if bound.is_some_and(|b| c.degree() > b) {
                    skipped = true;
                    continue;
                }
                let r = reduce_impl(&c, &rs, None, false).remainder;
                if r.is_zero() {
                    continue;
                }
                let r = r.monic();
                let key = format!("{:?}", r.terms);
                if seen.insert(key, ()).is_none() {
                    out.push(r);
                }
            }
        }
    }
    (out, skipped)
}

/// Completion: self-reduce, adjoin the reduced compositions, and repeat
/// until every composition reduces to zero.
pub fn groebner_basis<F: Field>(gens: &[NCPoly<F>], degree_bound: Option<usize>) -> GroebnerBasis<F> {
    let mut rules = self_reduce(gens);
    let mut rounds = Vec::new();
    let mut truncated = false;
    loop {
        let (new, skipped) = reduced_compositions(&rules, degree_bound);
        truncated |= skipped;
        if new.is_empty() {
            let status = match (truncated, degree_bound) {
                (true, Some(b)) => Completion::Truncated { degree_bound: b },
                _ => Completion::Complete,
            };
            return GroebnerBasis { rules, status, rounds };
        }
        let before = rules.len();
        let count = new.len();
        rules.extend(new);
        rules = self_reduce(&rules);
        rounds.push(RoundLog { rules: before, compositions: count, after_self_reduction: rules.len() });
    }
}

fn has_suffix_in(w: &[u8], lms: &HashMap<&[u8], ()>, max_len: usize) -> bool {
    (1..=max_len.min(w.len())).any(|l| lms.contains_key(&w[w.len() - l..]))
}

/// Standard monomials of degree at most `max_degree`, in deglex order.
pub fn standard_monomials_up_to(lms: &[Word], letters: usize, max_degree: usize) -> Vec<Word> {
    let set: HashMap<&[u8], ()> = lms.iter().map(|w| (w.0.as_slice(), ())).collect();
    let max_len = lms.iter().map(Word::len).max().unwrap_or(0);
    if set.contains_key(&[][..]) {
        return Vec::new();
    }
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<u8>::new()];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..letters as u8 {
                let mut x = w.clone();
                x.push(l);
                if !has_suffix_in(&x, &set, max_len) {
                    next.push(x);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned().map(Word));
        layer = next;
    }
    out
}

/// Number of standard monomials in each degree `0..=up_to`.
pub fn graded_dimensions(lms: &[Word], letters: usize, up_to: usize) -> Vec<usize> {
    let mut counts = vec![0usize; up_to + 1];
    for w in standard_monomials_up_to(lms, letters, up_to) {
        counts[w.len()] += 1;
    }
    counts
}

/// True when only finitely many words avoid every leading monomial: the
/// graph on avoiding words of length `m − 1` (with `m` the longest leading
/// monomial) has no cycle.
pub fn is_finite(lms: &[Word], letters: usize) -> bool {
    let m = lms.iter().map(Word::len).max().unwrap_or(0);
    if m == 0 {
        return letters == 0 || lms.iter().any(Word::is_empty);
    }
    if m == 1 {
        return (0..letters as u8).all(|l| lms.iter().any(|w| w.0 == [l]));
    }
    let states: Vec<Word> = standard_monomials_up_to(lms, letters, m - 1).into_iter().filter(|w| w.len() == m - 1).collect();
    let index: HashMap<&[u8], usize> = states.iter().enumerate().map(|(i, w)| (w.0.as_slice(), i)).collect();
    let set: HashMap<&[u8], ()> = lms.iter().map(|w| (w.0.as_slice(), ())).collect();
    let succ: Vec<Vec<usize>> = states
        .iter()
        .map(|s| {
            (0..letters as u8)
                .filter_map(|l| {
                    let mut x = s.0.clone();
                    x.push(l);
                    if has_suffix_in(&x, &set, m) {
                        None
                    } else {
                        index.get(&x[1..]).copied()
                    }
                })
                .collect()
        })
        .collect();
    // Kahn's algorithm: acyclic iff every state is removed.
    let mut indeg = vec![0usize; states.len()];
    for s in &succ {
        for &t in s {
            indeg[t] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..states.len()).filter(|&i| indeg[i] == 0).collect();
    let mut removed = 0;
    while let Some(i) = stack.pop() {
        removed += 1;
        for &t in &succ[i] {
            indeg[t] -= 1;
            if indeg[t] == 0 {
                stack.push(t);
            }
        }
    }
    removed == states.len()
}

/// All standard monomials of a finite quotient, in deglex order.
pub fn standard_monomials(lms: &[Word], letters: usize) -> Result<Vec<Word>, GroebnerError> {
    if !is_finite(lms, letters) {
        return Err(GroebnerError::Infinite);
    }
    let m = lms.iter().map(Word::len).max().unwrap_or(0);
    let bound = m.saturating_sub(1) + letters.pow(m.saturating_sub(1) as u32) + 1;
    Ok(standard_monomials_up_to(lms, letters, bound))
}

/// A presentation: ordered alphabet and relations.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relations: Vec<NCPoly<Rational>>,
}

impl Presentation {
    /// Line 1 lists the letters in order; each further nonempty line is a
    /// polynomial. Lines starting with `#` are comments.
    pub fn parse(text: &str) -> Result<Self, GroebnerError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let head = lines.next().ok_or_else(|| GroebnerError::Parse("empty presentation".into()))?;
        let letters: Vec<char> = head.split_whitespace().map(|t| {
            let mut cs = t.chars();
            match (cs.next(), cs.next()) {
                (Some(c), None) if c.is_alphabetic() => Ok(c),
                _ => Err(GroebnerError::Parse(format!("bad letter {t:?}"))),
            }
        }).collect::<Result<_, _>>()?;
        let alphabet = Alphabet(letters);
        let relations = lines.map(|l| alphabet.parse_poly(l)).collect::<Result<_, _>>()?;
        Ok(Presentation { alphabet, relations })
    }

    pub fn to_text(&self) -> String {
        let mut s: String = self.alphabet.0.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
        s.push('\n');
        for r in &self.relations {
            s.push_str(&self.alphabet.format_poly(r));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = Alphabet::standard(self.0.iter().copied().max().map_or(0, |m| m as usize + 1));
        write!(f, "{}", a.format_word(self))
    }
}
