//! Quaternary monomials, straightening, and the expansion map into the free
//! associative algebra.
//!
//! A monomial is a full quaternary tree whose leaves carry variable labels
//! `0, 1, 2, …` (printed as `a, b, c, …`). An association type is a tree
//! shape; the canonical types of a degree are the shapes that are fixed by
//! the reversal symmetry at every node.
//!
//! Canonical form: children are straightened first, then the node keeps
//! whichever of its child sequence and the reversed sequence is smaller.
//! Sequences compare first by child shapes (a subtree sorts before a leaf)
//! and then by the flattened leaf labels. Choosing the reversal multiplies
//! by the sign of the operation; a node equal to its own reversal is zero
//! for the anti-tetrad.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{IntMatrix, Matrix, Modulus};
use crate::scalar::{rint, Rational};
use crate::symmetric_group::{multiset_permutations, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unsupported degree {0}: degrees are 1 mod 3")]
    UnsupportedDegree(usize),
    #[error("type index {0} out of range")]
    BadType(usize),
    #[error("argument list does not match the degree")]
    BadArguments,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Tetrad `abcd + dcba` or anti-tetrad `abcd − dcba`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpKind {
    Tetrad,
    AntiTetrad,
}

impl OpKind {
    /// Sign picked up by reversing the arguments of one operation.
    pub fn sign(self) -> i64 {
        match self {
            OpKind::Tetrad => 1,
            OpKind::AntiTetrad => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OpKind::Tetrad => "tetrad",
            OpKind::AntiTetrad => "anti",
        }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OpKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tetrad" => Ok(OpKind::Tetrad),
            "anti" | "anti-tetrad" | "anti_tetrad" | "antitetrad" => Ok(OpKind::AntiTetrad),
            _ => Err(format!("unknown operation {s}")),
        }
    }
}

/// A quaternary tree with labelled leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf(u8),
    Node(Box<[Tree; 4]>),
}

impl Tree {
    pub fn node(children: [Tree; 4]) -> Tree {
        Tree::Node(Box::new(children))
    }

    /// Node over four leaves.
    pub fn quad(a: u8, b: u8, c: u8, d: u8) -> Tree {
        Tree::node([Tree::Leaf(a), Tree::Leaf(b), Tree::Leaf(c), Tree::Leaf(d)])
    }

    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(ch) => ch.iter().map(Tree::degree).sum(),
        }
    }

    pub fn height(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node(ch) => 1 + ch.iter().map(Tree::height).max().unwrap_or(0),
        }
    }

    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(16);
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            Tree::Leaf(x) => out.push(*x),
            Tree::Node(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    /// The shape with all labels erased.
    pub fn shape(&self) -> Tree {
        match self {
            Tree::Leaf(_) => Tree::Leaf(0),
            Tree::Node(ch) => Tree::Node(Box::new([ch[0].shape(), ch[1].shape(), ch[2].shape(), ch[3].shape()])),
        }
    }

    /// Relabels the leaves in order from `labels`.
    pub fn fill(&self, labels: &[u8]) -> Tree {
        let mut it = labels.iter();
        let t = self.fill_from(&mut it);
        assert!(it.next().is_none(), "too many labels");
        t
    }

    fn fill_from(&self, it: &mut std::slice::Iter<'_, u8>) -> Tree {
        match self {
            Tree::Leaf(_) => Tree::Leaf(*it.next().expect("too few labels")),
            Tree::Node(ch) => Tree::Node(Box::new([
                ch[0].fill_from(it),
                ch[1].fill_from(it),
                ch[2].fill_from(it),
                ch[3].fill_from(it),
            ])),
        }
    }

    /// Applies `f` to every leaf label.
    pub fn relabel(&self, f: &impl Fn(u8) -> u8) -> Tree {
        match self {
            Tree::Leaf(x) => Tree::Leaf(f(*x)),
            Tree::Node(ch) => Tree::Node(Box::new([ch[0].relabel(f), ch[1].relabel(f), ch[2].relabel(f), ch[3].relabel(f)])),
        }
    }

    /// Bracket notation with `-` for leaves, e.g. `{{----}---}`.
    pub fn shape_string(&self) -> String {
        match self {
            Tree::Leaf(_) => "-".into(),
            Tree::Node(ch) => format!("{{{}}}", ch.iter().map(Tree::shape_string).collect::<String>()),
        }
    }

    /// Replaces the leaf labelled `label` with `sub`.
    pub fn substitute(&self, label: u8, sub: &Tree) -> Tree {
        match self {
            Tree::Leaf(x) if *x == label => sub.clone(),
            Tree::Leaf(_) => self.clone(),
            Tree::Node(ch) => Tree::Node(Box::new([
                ch[0].substitute(label, sub),
                ch[1].substitute(label, sub),
                ch[2].substitute(label, sub),
                ch[3].substitute(label, sub),
            ])),
        }
    }
}

/// Letter for a variable index: a, b, c, …
pub fn letter(x: u8) -> char {
    (b'a' + x) as char
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(x) => write!(f, "{}", letter(*x)),
            Tree::Node(ch) => write!(f, "{{{},{},{},{}}}", ch[0], ch[1], ch[2], ch[3]),
        }
    }
}

impl FromStr for Tree {
    type Err = AlgebraError;

    /// Parses nested brace notation such as `{{a,b,c,d},e,f,g}`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(AlgebraError::Parse(format!("trailing input in {s}")));
        }
        Ok(t)
    }
}

fn parse_tree(c: &[char], pos: &mut usize) -> Result<Tree, AlgebraError> {
    let err = |m: &str| AlgebraError::Parse(m.to_string());
    match c.get(*pos) {
        Some('{') | Some('[') => {
            *pos += 1;
            let mut ch = Vec::with_capacity(4);
            for k in 0..4 {
                ch.push(parse_tree(c, pos)?);
                let expect = if k < 3 { [',', ','] } else { ['}', ']'] };
                match c.get(*pos) {
                    Some(x) if expect.contains(x) => *pos += 1,
                    _ => return Err(err("malformed node")),
                }
            }
            let arr: [Tree; 4] = ch.try_into().map_err(|_| err("node arity"))?;
            Ok(Tree::node(arr))
        }
        Some(x) if x.is_ascii_lowercase() => {
            *pos += 1;
            Ok(Tree::Leaf(*x as u8 - b'a'))
        }
        _ => Err(err("unexpected character")),
    }
}

/// Shape order: a subtree sorts before a leaf; subtrees compare by their
/// children.
pub fn cmp_shape(a: &Tree, b: &Tree) -> Ordering {
    match (a, b) {
        (Tree::Leaf(_), Tree::Leaf(_)) => Ordering::Equal,
        (Tree::Node(_), Tree::Leaf(_)) => Ordering::Less,
        (Tree::Leaf(_), Tree::Node(_)) => Ordering::Greater,
        (Tree::Node(x), Tree::Node(y)) => x.iter().zip(y.iter()).map(|(p, q)| cmp_shape(p, q)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal),
    }
}

fn cmp_children(a: &[Tree; 4], b: &[Tree; 4]) -> Ordering {
    let s = a.iter().zip(b.iter()).map(|(p, q)| cmp_shape(p, q)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal);
    if s.is_ne() {
        return s;
    }
    let la: Vec<u8> = a.iter().flat_map(|t| t.leaves()).collect();
    let lb: Vec<u8> = b.iter().flat_map(|t| t.leaves()).collect();
    la.cmp(&lb)
}

/// Straightens a monomial; `None` when it vanishes.
pub fn straighten(t: &Tree, op: OpKind) -> Option<(i64, Tree)> {
    match t {
        Tree::Leaf(_) => Some((1, t.clone())),
        Tree::Node(ch) => {
            let mut sign = 1;
            let mut kids: Vec<Tree> = Vec::with_capacity(4);
            for c in ch.iter() {
                let (s, k) = straighten(c, op)?;
                sign *= s;
                kids.push(k);
            }
            let fwd: [Tree; 4] = kids.try_into().expect("four children");
            let rev = [fwd[3].clone(), fwd[2].clone(), fwd[1].clone(), fwd[0].clone()];
            match cmp_children(&fwd, &rev) {
                Ordering::Less => Some((sign, Tree::node(fwd))),
                Ordering::Greater => Some((sign * op.sign(), Tree::node(rev))),
                Ordering::Equal => match op {
                    OpKind::Tetrad => Some((sign, Tree::node(fwd))),
                    OpKind::AntiTetrad => None,
                },
            }
        }
    }
}

/// Canonical shape of a tree shape (labels ignored).
fn canonical_shape(t: &Tree) -> Tree {
    match t {
        Tree::Leaf(_) => Tree::Leaf(0),
        Tree::Node(ch) => {
            let fwd = [canonical_shape(&ch[0]), canonical_shape(&ch[1]), canonical_shape(&ch[2]), canonical_shape(&ch[3])];
            let rev = [fwd[3].clone(), fwd[2].clone(), fwd[1].clone(), fwd[0].clone()];
            let o = fwd.iter().zip(rev.iter()).map(|(p, q)| cmp_shape(p, q)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal);
            if o.is_gt() {
                Tree::node(rev)
            } else {
                Tree::node(fwd)
            }
        }
    }
}

fn all_shapes(n: usize) -> Vec<Tree> {
    if n == 1 {
        return vec![Tree::Leaf(0)];
    }
    let mut out = Vec::new();
    if n < 4 || (n - 1) % 3 != 0 {
        return out;
    }
    let sizes: Vec<usize> = (1..=n - 3).filter(|k| (k - 1) % 3 == 0).collect();
    for &a in &sizes {
        for &b in &sizes {
            for &c in &sizes {
                if a + b + c >= n {
                    continue;
                }
                let d = n - a - b - c;
                if (d - 1) % 3 != 0 {
                    continue;
                }
                for ta in all_shapes(a) {
                    for tb in all_shapes(b) {
                        for tc in all_shapes(c) {
                            for td in all_shapes(d) {
                                out.push(Tree::node([ta.clone(), tb.clone(), tc.clone(), td.clone()]));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The canonical association types of a degree: deeper shapes first, then
/// by shape order.
pub fn association_types(degree: usize) -> Result<Vec<Tree>, AlgebraError> {
    if degree < 4 || (degree - 1) % 3 != 0 {
        return Err(AlgebraError::UnsupportedDegree(degree));
    }
    let mut shapes: Vec<Tree> = all_shapes(degree).iter().map(canonical_shape).collect();
    shapes.sort_by(|a, b| b.height().cmp(&a.height()).then_with(|| cmp_shape(a, b)));
    shapes.dedup_by(|a, b| cmp_shape(a, b).is_eq());
    Ok(shapes)
}

/// A monomial given by a canonical type index and its leaf labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadMonomial {
    pub ty: usize,
    pub args: Vec<u8>,
}

/// The canonical types of one degree with lookup by shape.
#[derive(Clone, Debug)]
pub struct TypeTable {
    degree: usize,
    shapes: Vec<Tree>,
    index: HashMap<String, usize>,
}

impl TypeTable {
    pub fn new(degree: usize) -> Result<Self, AlgebraError> {
        let shapes = association_types(degree)?;
        let index = shapes.iter().enumerate().map(|(i, s)| (s.shape_string(), i)).collect();
        Ok(TypeTable { degree, shapes, index })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    pub fn shapes(&self) -> &[Tree] {
        &self.shapes
    }

    pub fn tree(&self, m: &QuadMonomial) -> Tree {
        self.shapes[m.ty].fill(&m.args)
    }

    /// Straightens a tree of this degree into a canonical monomial.
    pub fn canonical(&self, t: &Tree, op: OpKind) -> Option<(i64, QuadMonomial)> {
        let (s, c) = straighten(t, op)?;
        let ty = *self.index.get(&c.shape_string()).expect("canonical shape is listed");
        Some((s, QuadMonomial { ty, args: c.leaves() }))
    }

    /// The expansion of the type's identity monomial as signed position
    /// sequences.
    pub fn type_expansion(&self, ty: usize, op: OpKind) -> Vec<(i64, Vec<u8>)> {
        let t = self.shapes[ty].fill(&(0..self.degree as u8).collect::<Vec<_>>());
        expand(&t, op)
    }

    /// Canonical multilinear monomials, type-major then lexicographic.
    pub fn multilinear_monomials(&self, op: OpKind) -> Vec<QuadMonomial> {
        let mut out = Vec::new();
        for ty in 0..self.shapes.len() {
            for p in Permutation::all(self.degree) {
                let m = QuadMonomial { ty, args: p.images().to_vec() };
                if let Some((1, c)) = self.canonical(&self.tree(&m), op) {
                    if c == m {
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    /// Type symmetries `ι − ε·τ`, one for every node whose reversal fixes
    /// the shape, listed type by type in depth-first node order.
    pub fn type_symmetries(&self, op: OpKind) -> Vec<QuadPolynomial> {
        let id: Vec<u8> = (0..self.degree as u8).collect();
        let mut out = Vec::new();
        for (ty, shape) in self.shapes.iter().enumerate() {
            let t = shape.fill(&id);
            for rev in palindromic_node_reversals(&t) {
                let mut p = QuadPolynomial::new(self.degree, op);
                p.add_term(QuadMonomial { ty, args: id.clone() }, 1);
                p.add_term(QuadMonomial { ty, args: rev.leaves() }, -op.sign());
                out.push(p);
            }
        }
        out
    }
}

/// Trees obtained by reversing the children of one node whose child shape
/// sequence is a palindrome.
fn palindromic_node_reversals(t: &Tree) -> Vec<Tree> {
    let mut out = Vec::new();
    if let Tree::Node(ch) = t {
        let rev = [ch[3].clone(), ch[2].clone(), ch[1].clone(), ch[0].clone()];
        let pal = ch.iter().zip(rev.iter()).all(|(a, b)| cmp_shape(a, b).is_eq());
        if pal {
            out.push(Tree::node(rev));
        }
        for k in 0..4 {
            for sub in palindromic_node_reversals(&ch[k]) {
                let mut c = ch.clone();
                c[k] = sub;
                out.push(Tree::Node(c));
            }
        }
    }
    out
}

/// Full expansion of a monomial into signed words.
pub fn expand(t: &Tree, op: OpKind) -> Vec<(i64, Vec<u8>)> {
    match t {
        Tree::Leaf(x) => vec![(1, vec![*x])],
        Tree::Node(ch) => {
            let parts: Vec<Vec<(i64, Vec<u8>)>> = ch.iter().map(|c| expand(c, op)).collect();
            let mut out = Vec::new();
            for (order, sign) in [([0usize, 1, 2, 3], 1i64), ([3, 2, 1, 0], op.sign())] {
                let mut acc: Vec<(i64, Vec<u8>)> = vec![(sign, Vec::new())];
                for &k in &order {
                    let mut next = Vec::with_capacity(acc.len() * parts[k].len());
                    for (s, w) in &acc {
                        for (s2, w2) in &parts[k] {
                            let mut v = w.clone();
                            v.extend_from_slice(w2);
                            next.push((s * s2, v));
                        }
                    }
                    acc = next;
                }
                out.extend(acc);
            }
            out
        }
    }
}

/// Expansion collected into a word → coefficient map with zeros removed.
pub fn expand_collected(t: &Tree, op: OpKind) -> BTreeMap<Vec<u8>, i64> {
    let mut m = BTreeMap::new();
    for (s, w) in expand(t, op) {
        *m.entry(w).or_insert(0) += s;
    }
    m.retain(|_, c| *c != 0);
    m
}

/// A linear combination of canonical monomials of one degree with integer
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadPolynomial {
    pub degree: usize,
    pub op: OpKind,
    pub terms: BTreeMap<QuadMonomial, i64>,
}

/// A multilinear element of `(F S_n)^t`: every term's arguments form a
/// permutation.
pub type MultilinearIdentity = QuadPolynomial;

impl QuadPolynomial {
    pub fn new(degree: usize, op: OpKind) -> Self {
        QuadPolynomial { degree, op, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, m: QuadMonomial, c: i64) {
        let e = self.terms.entry(m.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    /// Adds `c` times a raw tree after straightening it.
    pub fn add_tree(&mut self, types: &TypeTable, t: &Tree, c: i64) {
        if let Some((s, m)) = types.canonical(t, self.op) {
            self.add_term(m, s * c);
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

    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(|m| {
            let mut v = m.args.clone();
            v.sort_unstable();
            v.iter().enumerate().all(|(i, &x)| i == x as usize)
        })
    }

    /// Euclidean length squared of the coefficient vector.
    pub fn norm_squared(&self) -> i64 {
        self.terms.values().map(|c| c * c).sum()
    }

    /// Expansion into the free associative algebra.
    pub fn expand(&self, types: &TypeTable) -> BTreeMap<Vec<u8>, i64> {
        let mut acc: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
        for (m, &c) in &self.terms {
            for (s, w) in expand(&types.tree(m), self.op) {
                *acc.entry(w).or_insert(0) += s * c;
            }
        }
        acc.retain(|_, c| *c != 0);
        acc
    }

    /// Left action of a permutation on the variables.
    pub fn act(&self, sigma: &Permutation) -> Self {
        let mut out = QuadPolynomial::new(self.degree, self.op);
        for (m, &c) in &self.terms {
            out.add_term(QuadMonomial { ty: m.ty, args: m.args.iter().map(|&x| sigma.apply(x as usize) as u8).collect() }, c);
        }
        out
    }

    /// Human-readable form using the type table.
    pub fn display(&self, types: &TypeTable) -> String {
        let mut s = String::new();
        for (m, &c) in &self.terms {
            let t = types.tree(m);
            let body = match self.op {
                OpKind::Tetrad => t.to_string(),
                OpKind::AntiTetrad => t.to_string().replace('{', "[").replace('}', "]"),
            };
            let sign = if c < 0 { "-" } else { "+" };
            let mag = c.abs();
            if s.is_empty() && c > 0 {
                if mag == 1 { s.push_str(&body) } else { s.push_str(&format!("{mag}{body}")) }
            } else if mag == 1 {
                s.push_str(&format!(" {sign} {body}"));
            } else {
                s.push_str(&format!(" {sign} {mag}{body}"));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    pub fn to_json(&self) -> IdentityJson {
        IdentityJson {
            op: self.op.name().to_string(),
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson { ty: m.ty, perm: m.args.iter().map(|&x| x as usize + 1).collect(), coeff: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(j: &IdentityJson) -> Result<Self, AlgebraError> {
        let op: OpKind = j.op.parse().map_err(AlgebraError::Parse)?;
        let mut p = QuadPolynomial::new(j.degree, op);
        for t in &j.terms {
            if t.perm.len() != j.degree || t.perm.iter().any(|&x| x == 0) {
                return Err(AlgebraError::BadArguments);
            }
            let c: i64 = t.coeff.parse().map_err(|_| AlgebraError::Parse(t.coeff.clone()))?;
            p.add_term(QuadMonomial { ty: t.ty, args: t.perm.iter().map(|&x| (x - 1) as u8).collect() }, c);
        }
        Ok(p)
    }
}

/// Serialized identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityJson {
    pub op: String,
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

/// Serialized term; `perm` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(rename = "type")]
    pub ty: usize,
    pub perm: Vec<usize>,
    pub coeff: String,
}

/// Index of a permutation word in lexicographic order.
pub fn permutation_rank(w: &[u8]) -> usize {
    let n = w.len();
    let mut fact = vec![1usize; n + 1];
    for i in 1..=n {
        fact[i] = fact[i - 1] * i;
    }
    let mut used = 0u32;
    let mut r = 0;
    for (i, &x) in w.iter().enumerate() {
        let smaller = (0..x).filter(|&y| used & (1 << y) == 0).count();
        r += smaller * fact[n - 1 - i];
        used |= 1 << x;
    }
    r
}

/// Multilinear expansion matrix: rows are words (lexicographic), columns
/// are monomials. Degree 4 uses all 24 monomials; higher degrees use the
/// canonical monomials.
pub struct ExpansionMatrix {
    pub monomials: Vec<QuadMonomial>,
    /// Sparse columns: (word index, coefficient).
    pub columns: Vec<Vec<(usize, i64)>>,
    pub words: usize,
}

impl ExpansionMatrix {
    pub fn new(degree: usize, op: OpKind) -> Result<Self, AlgebraError> {
        let types = TypeTable::new(degree)?;
        let monomials: Vec<QuadMonomial> = if degree == 4 {
            Permutation::all(4).into_iter().map(|p| QuadMonomial { ty: 0, args: p.images().to_vec() }).collect()
        } else {
            types.multilinear_monomials(op)
        };
        let columns = monomials
            .iter()
            .map(|m| {
                let mut col: Vec<(usize, i64)> = expand_collected(&types.tree(m), op).into_iter().map(|(w, c)| (permutation_rank(&w), c)).collect();
                col.sort_unstable();
                col
            })
            .collect();
        let words = (1..=degree).product();
        Ok(ExpansionMatrix { monomials, columns, words })
    }

    /// Dense rows modulo a prime.
    pub fn rows_mod(&self, m: Modulus) -> Vec<Vec<u32>> {
        let mut rows = vec![vec![0u32; self.monomials.len()]; self.words];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, c) in col {
                rows[i][j] = m.reduce(c);
            }
        }
        rows
    }

    /// Dense rational matrix.
    pub fn to_rational(&self) -> Matrix<Rational> {
        let mut out = Matrix::zeros(self.words, self.monomials.len());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, c) in col {
                out.set(i, j, rint(c));
            }
        }
        out
    }
}

/// A multidegree: multiplicity of each variable `a, b, c, …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multidegree(pub Vec<usize>);

impl Multidegree {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Variables of multiplicity one that follow all repeated variables.
    pub fn simple_tail(&self) -> usize {
        self.0.iter().rev().take_while(|&&m| m == 1).count()
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(k, &m)| if m == 1 { letter(k as u8).to_string() } else { format!("{}{}", letter(k as u8), m) })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Multidegree {
    type Err = AlgebraError;

    /// Parses "a6,b,c,d,e"; letters must appear in order a, b, c, ….
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for (k, tok) in s.split(',').enumerate() {
            let tok = tok.trim();
            let mut chars = tok.chars();
            let l = chars.next().ok_or_else(|| AlgebraError::Parse(s.to_string()))?;
            if l as u32 != 'a' as u32 + k as u32 {
                return Err(AlgebraError::Parse(format!("variables must be a, b, c, … in order: {s}")));
            }
            let rest: String = chars.collect();
            let m = if rest.is_empty() { 1 } else { rest.parse().map_err(|_| AlgebraError::Parse(s.to_string()))? };
            if m == 0 {
                return Err(AlgebraError::Parse(s.to_string()));
            }
            out.push(m);
        }
        Ok(Multidegree(out))
    }
}

/// Integer expansion matrix for a multidegree.
#[derive(Clone, Debug)]
pub struct MultihomogeneousMatrix {
    pub multidegree: Multidegree,
    pub op: OpKind,
    /// Rows: canonical monomials.
    pub monomials: Vec<QuadMonomial>,
    /// Columns: word arrangements in lexicographic order.
    pub words: Vec<Vec<u8>>,
    pub matrix: IntMatrix,
}

/// Canonical monomials of a multidegree. With `ordered_simple`, the
/// variables of multiplicity one must occur in increasing order in the
/// flattened argument sequence.
pub fn multihomogeneous_monomials(types: &TypeTable, md: &Multidegree, op: OpKind, ordered_simple: bool) -> Vec<QuadMonomial> {
    let simple: Vec<u8> = md.0.iter().enumerate().filter(|(_, &m)| m == 1).map(|(k, _)| k as u8).collect();
    let mut out = Vec::new();
    for ty in 0..types.len() {
        for args in multiset_permutations(&md.0) {
            if ordered_simple {
                let seq: Vec<u8> = args.iter().copied().filter(|x| simple.contains(x)).collect();
                if seq.windows(2).any(|w| w[0] > w[1]) {
                    continue;
                }
            }
            let m = QuadMonomial { ty, args };
            if let Some((_, c)) = types.canonical(&types.tree(&m), op) {
                if c == m {
                    out.push(m);
                }
            }
        }
    }
    out
}

/// Builds the monomial × word expansion matrix of a multidegree over Z.
/// With `ordered_simple`, row `m` is the expansion of the alternating sum
/// of `m` over the variables of multiplicity one.
pub fn multihomogeneous_expansion_matrix(md: &Multidegree, op: OpKind, ordered_simple: bool) -> Result<MultihomogeneousMatrix, AlgebraError> {
    let types = TypeTable::new(md.total())?;
    let monomials = multihomogeneous_monomials(&types, md, op, ordered_simple);
    let words = multiset_permutations(&md.0);
    let index: HashMap<&[u8], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let simple: Vec<u8> = md.0.iter().enumerate().filter(|(_, &m)| m == 1).map(|(k, _)| k as u8).collect();
    let shuffles: Vec<(Vec<u8>, i64)> = if ordered_simple {
        Permutation::all(simple.len()).into_iter().map(|s| (s.images().to_vec(), s.sign())).collect()
    } else {
        vec![((0..simple.len() as u8).collect(), 1)]
    };
    let mut matrix = IntMatrix::zeros(monomials.len(), words.len());
    for (i, m) in monomials.iter().enumerate() {
        for (w, c) in expand_collected(&types.tree(m), op) {
            for (s, sign) in &shuffles {
                let v: Vec<u8> = w
                    .iter()
                    .map(|&x| match simple.iter().position(|&y| y == x) {
                        Some(k) => simple[s[k] as usize],
                        None => x,
                    })
                    .collect();
                let j = index[v.as_slice()];
                matrix.set(i, j, matrix.get(i, j) + sign * c);
            }
        }
    }
    Ok(MultihomogeneousMatrix { multidegree: md.clone(), op, monomials, words, matrix })
}
