//! Isotypic components, module dimensions, liftings and partition reports.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::known;
use crate::free_algebra::{Multidegree, OpKind, QuadMonomial, QuadPolynomial, Tree, TypeTable};
use crate::linalg::modp::{inverse_mod, matmul_mod};
use crate::linalg::{rank_mod, EchelonBasis, Modulus};
use crate::symmetric_group::{partitions, young_subgroup, Partition, Permutation, RepProvider};

/// How a nonlinear identity is linearized before entering a module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Linearization {
    /// Already multilinear.
    None,
    /// Symmetric over the occurrences of every variable.
    Symmetric(Multidegree),
    /// Symmetric over repeated variables and alternating over the
    /// variables of multiplicity one, which must come last.
    Mixed(Multidegree),
}

/// An identity offered to a module computation.
#[derive(Clone, Debug)]
pub struct Generator {
    pub poly: QuadPolynomial,
    pub linearization: Linearization,
}

impl Generator {
    pub fn multilinear(poly: QuadPolynomial) -> Self {
        Generator { poly, linearization: Linearization::None }
    }

    pub fn symmetric(poly: QuadPolynomial, md: Multidegree) -> Self {
        Generator { poly, linearization: Linearization::Symmetric(md) }
    }

    pub fn mixed(poly: QuadPolynomial, md: Multidegree) -> Self {
        Generator { poly, linearization: Linearization::Mixed(md) }
    }

    /// The basic linearization: occurrences of each variable are replaced
    /// by consecutive labels from left to right.
    pub fn basic(&self) -> QuadPolynomial {
        match &self.linearization {
            Linearization::None => self.poly.clone(),
            Linearization::Symmetric(md) | Linearization::Mixed(md) => basic_linearization(&self.poly, md),
        }
    }
}

/// Replaces the occurrences of variable `k` by the labels of block `k`
/// in increasing order from left to right.
pub fn basic_linearization(p: &QuadPolynomial, md: &Multidegree) -> QuadPolynomial {
    let mut starts = Vec::with_capacity(md.0.len());
    let mut s = 0u8;
    for &k in &md.0 {
        starts.push(s);
        s += k as u8;
    }
    let mut out = QuadPolynomial::new(p.degree, p.op);
    for (m, &c) in &p.terms {
        let mut next = starts.clone();
        let args = m
            .args
            .iter()
            .map(|&x| {
                let v = next[x as usize];
                next[x as usize] += 1;
                v
            })
            .collect();
        out.add_term(QuadMonomial { ty: m.ty, args }, c);
    }
    out
}

/// One isotypic component: an echelon basis of block rows of width `t·d`.
pub struct Isotypic {
    rp: RepProvider,
    m: Modulus,
    types: usize,
    basis: EchelonBasis,
    transforms: HashMap<Linearization, Vec<Vec<u32>>>,
}

impl Isotypic {
    pub fn new(lambda: &Partition, types: usize, m: Modulus) -> Self {
        let rp = RepProvider::new(lambda);
        let d = rp.dimension();
        Isotypic { rp, m, types, basis: EchelonBasis::new(m, types * d), transforms: HashMap::new() }
    }

    pub fn partition(&self) -> &Partition {
        self.rp.partition()
    }

    pub fn dimension(&self) -> usize {
        self.rp.dimension()
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn provider(&self) -> &RepProvider {
        &self.rp
    }

    pub fn basis(&self) -> &EchelonBasis {
        &self.basis
    }

    /// Replaces the echelon basis, e.g. to restore a saved state.
    pub fn set_basis(&mut self, b: EchelonBasis) {
        self.basis = b;
    }

    /// `Σ c·A(σ)` for every association type, as flat `d × d` arrays.
    pub fn blocks(&self, p: &QuadPolynomial) -> Vec<Vec<i64>> {
        let d = self.dimension();
        let mut out = vec![vec![0i64; d * d]; self.types];
        for (mono, &c) in &p.terms {
            let a = self.rp.polytabloid_matrix(&Permutation::from_images(mono.args.clone()));
            for (x, &y) in out[mono.ty].iter_mut().zip(a.iter()) {
                *x += c * y as i64;
            }
        }
        out
    }

    /// Block row `[L·B_1 … L·B_t]` modulo p, with `L` the identity when
    /// `left` is `None`.
    pub fn block_rows(&self, blocks: &[Vec<i64>], left: Option<&[Vec<u32>]>) -> Vec<Vec<u32>> {
        let d = self.dimension();
        let m = self.m;
        let mut rows = vec![vec![0u32; self.types * d]; d];
        for (j, b) in blocks.iter().enumerate() {
            let bm: Vec<Vec<u32>> = (0..d).map(|i| (0..d).map(|k| m.reduce(b[i * d + k])).collect()).collect();
            let prod = match left {
                Some(l) => matmul_mod(m, l, &bm),
                None => bm,
            };
            for (i, r) in prod.into_iter().enumerate() {
                rows[i][j * d..(j + 1) * d].copy_from_slice(&r);
            }
        }
        rows
    }

    /// Left factor `A(1)·L·A(1)⁻¹` for a linearization, cached.
    fn transform(&mut self, lin: &Linearization) -> Option<Vec<Vec<u32>>> {
        let md = match lin {
            Linearization::None => return None,
            Linearization::Symmetric(md) | Linearization::Mixed(md) => md,
        };
        if let Some(t) = self.transforms.get(lin) {
            return Some(t.clone());
        }
        let d = self.dimension();
        let m = self.m;
        let n = self.rp.partition().size();
        let a0 = self.rp.polytabloid_matrix(&Permutation::identity(n));
        let a0m: Vec<Vec<u32>> = (0..d).map(|i| (0..d).map(|k| m.reduce(a0[i * d + k] as i64)).collect()).collect();
        let a_inv = inverse_mod(m, &a0m).expect("polytabloid matrix is invertible modulo p");
        let factors: Vec<(Vec<usize>, bool)> = match lin {
            Linearization::Symmetric(md) => vec![(md.0.clone(), false)],
            Linearization::Mixed(md) => {
                let tail = md.simple_tail();
                let head = md.0.len() - tail;
                let mut sym = md.0[..head].to_vec();
                sym.extend(std::iter::repeat(1).take(tail));
                let mut alt: Vec<usize> = std::iter::repeat(1).take(md.0[..head].iter().sum()).collect();
                alt.push(tail);
                vec![(sym, false), (alt, true)]
            }
            Linearization::None => unreachable!(),
        };
        debug_assert_eq!(md.total(), n);
        let mut acc: Option<Vec<Vec<u32>>> = None;
        for (blocks, alternating) in factors {
            let mut s = vec![0i64; d * d];
            for pi in young_subgroup(&blocks) {
                let c = if alternating { pi.sign() } else { 1 };
                let a = self.rp.polytabloid_matrix(&pi);
                for (x, &y) in s.iter_mut().zip(a.iter()) {
                    *x += c * y as i64;
                }
            }
            let sm: Vec<Vec<u32>> = (0..d).map(|i| (0..d).map(|k| m.reduce(s[i * d + k])).collect()).collect();
            let f = matmul_mod(m, &sm, &a_inv);
            acc = Some(match acc {
                None => f,
                Some(prev) => matmul_mod(m, &prev, &f),
            });
        }
        let t = acc.expect("at least one factor");
        self.transforms.insert(lin.clone(), t.clone());
        Some(t)
    }

    /// Block rows contributed by a generator.
    pub fn generator_rows(&mut self, g: &Generator) -> Vec<Vec<u32>> {
        let blocks = self.blocks(&g.basic());
        let left = self.transform(&g.linearization);
        self.block_rows(&blocks, left.as_deref())
    }

    /// Inserts rows; returns the rank increase.
    pub fn insert_rows(&mut self, rows: &[Vec<u32>]) -> usize {
        let before = self.basis.rank();
        for r in rows {
            self.basis.insert(r);
        }
        self.basis.rank() - before
    }

    /// Inserts a generator; returns the rank increase.
    pub fn add(&mut self, g: &Generator) -> usize {
        let rows = self.generator_rows(g);
        self.insert_rows(&rows)
    }

    /// Rank of the stacked matrix `[A(E_1); …; A(E_t)]`.
    pub fn expansion_rank(&self, types: &TypeTable, op: OpKind) -> usize {
        let d = self.dimension();
        let m = self.m;
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(self.types * d);
        for j in 0..types.len() {
            let mut s = vec![0i64; d * d];
            for (c, w) in types.type_expansion(j, op) {
                let a = self.rp.polytabloid_matrix(&Permutation::from_images(w));
                for (x, &y) in s.iter_mut().zip(a.iter()) {
                    *x += c * y as i64;
                }
            }
            rows.extend((0..d).map(|i| (0..d).map(|k| m.reduce(s[i * d + k])).collect::<Vec<u32>>()));
        }
        rank_mod(m, &rows, d)
    }
}

/// The liftings of a degree-`n` identity to degree `n + 3`: one
/// substitution `x_i ↦ {x_i, x_n, x_{n+1}, x_{n+2}}` per variable and the
/// two embeddings `{I, x_n, x_{n+1}, x_{n+2}}` and `{x_n, I, x_{n+1}, x_{n+2}}`.
pub fn lift_identity(p: &QuadPolynomial) -> Vec<QuadPolynomial> {
    let n = p.degree;
    let lo = TypeTable::new(n).expect("valid degree");
    let hi = TypeTable::new(n + 3).expect("valid degree");
    let (x, y, z) = (n as u8, n as u8 + 1, n as u8 + 2);
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n as u8 {
        let sub = Tree::quad(i, x, y, z);
        let mut q = QuadPolynomial::new(n + 3, p.op);
        for (m, &c) in &p.terms {
            q.add_tree(&hi, &lo.tree(m).substitute(i, &sub), c);
        }
        out.push(q);
    }
    for outer in 0..2 {
        let mut q = QuadPolynomial::new(n + 3, p.op);
        for (m, &c) in &p.terms {
            let t = lo.tree(m);
            let node = if outer == 0 {
                Tree::node([t, Tree::Leaf(x), Tree::Leaf(y), Tree::Leaf(z)])
            } else {
                Tree::node([Tree::Leaf(x), t, Tree::Leaf(y), Tree::Leaf(z)])
            };
            q.add_tree(&hi, &node, c);
        }
        out.push(q);
    }
    out
}

/// Liftings to degree 10 of the degree-7 defining identities.
pub fn degree10_liftings(op: OpKind) -> Vec<QuadPolynomial> {
    known::defining_identities(op).iter().flat_map(lift_identity).collect()
}

/// Multiplicities of `[λ]` in the identity modules of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub partition: String,
    pub dim: usize,
    pub sym_rows: usize,
    pub sym_cols: usize,
    pub symm: usize,
    /// Symmetries together with liftings; absent in degree 7.
    pub symmlift: Option<usize>,
    pub exp_rows: usize,
    pub exp_cols: usize,
    pub rank: usize,
    pub null: usize,
    pub new: usize,
}

/// Report for one partition. Degree 10 uses `liftings` (see
/// [`degree10_liftings`]); degree 7 ignores it.
pub fn partition_report(degree: usize, op: OpKind, lambda: &Partition, m: Modulus, liftings: &[QuadPolynomial]) -> PartitionReport {
    let types = TypeTable::new(degree).expect("valid degree");
    let t = types.len();
    let mut iso = Isotypic::new(lambda, t, m);
    let d = iso.dimension();
    let rank = iso.expansion_rank(&types, op);
    let null = t * d - rank;
    for s in types.type_symmetries(op) {
        iso.add(&Generator::multilinear(s));
    }
    let symm = iso.rank();
    let symmlift = if degree > 7 {
        for l in liftings {
            if iso.rank() >= null {
                break;
            }
            iso.add(&Generator::multilinear(l.clone()));
        }
        Some(iso.rank())
    } else {
        None
    };
    let old = symmlift.unwrap_or(symm);
    PartitionReport {
        partition: lambda.label(),
        dim: d,
        sym_rows: (t + 1) * d,
        sym_cols: t * d,
        symm,
        symmlift,
        exp_rows: t * d,
        exp_cols: d,
        rank,
        null,
        new: null - old,
    }
}

/// Reports for all partitions passing `filter`, computed in parallel and
/// returned in partition order. `progress` is called as each finishes.
pub fn partition_reports(
    degree: usize,
    op: OpKind,
    m: Modulus,
    filter: &(dyn Fn(&Partition) -> bool + Sync),
    progress: &(dyn Fn(&PartitionReport) + Sync),
) -> Vec<PartitionReport> {
    let liftings = if degree > 7 { degree10_liftings(op) } else { Vec::new() };
    let parts: Vec<Partition> = partitions(degree).into_iter().filter(|p| filter(p)).collect();
    parts
        .par_iter()
        .map(|lambda| {
            let r = partition_report(degree, op, lambda, m, &liftings);
            progress(&r);
            r
        })
        .collect()
}

struct TrackerPart {
    iso: Isotypic,
    seed: EchelonBasis,
    target: usize,
}

/// Tracks the dimension of the submodule of `(F S_n)^t` modulo the type
/// symmetries generated by a growing list of identities, summed over all
/// irreducibles.
pub struct ModuleTracker {
    parts: Vec<TrackerPart>,
}

impl ModuleTracker {
    /// Seeds every component with the type symmetries; the per-component
    /// target is the multiplicity in the kernel of the expansion map.
    pub fn new(degree: usize, op: OpKind, m: Modulus) -> Self {
        let types = TypeTable::new(degree).expect("valid degree");
        let syms = types.type_symmetries(op);
        let parts = partitions(degree)
            .iter()
            .map(|lambda| {
                let mut iso = Isotypic::new(lambda, types.len(), m);
                let null = types.len() * iso.dimension() - iso.expansion_rank(&types, op);
                for s in &syms {
                    iso.add(&Generator::multilinear(s.clone()));
                }
                let seed = iso.basis().clone();
                let target = null - seed.rank();
                TrackerPart { iso, seed, target }
            })
            .collect();
        ModuleTracker { parts }
    }

    /// Current dimension modulo the symmetries.
    pub fn dimension(&self) -> usize {
        self.parts.iter().map(|p| p.iso.dimension() * (p.iso.rank() - p.seed.rank())).sum()
    }

    /// Dimension of the whole kernel modulo the symmetries.
    pub fn target_dimension(&self) -> usize {
        self.parts.iter().map(|p| p.iso.dimension() * p.target).sum()
    }

    /// Per-component multiplicities in the current module.
    pub fn multiplicities(&self) -> Vec<(String, usize)> {
        self.parts.iter().map(|p| (p.iso.partition().label(), p.iso.rank() - p.seed.rank())).collect()
    }

    /// Block rows of a generator in every component.
    pub fn rows(&mut self, g: &Generator) -> Vec<Vec<Vec<u32>>> {
        self.parts.iter_mut().map(|p| p.iso.generator_rows(g)).collect()
    }

    /// Inserts precomputed rows; returns the dimension increase.
    pub fn insert_rows(&mut self, rows: &[Vec<Vec<u32>>]) -> usize {
        let mut inc = 0;
        for (p, r) in self.parts.iter_mut().zip(rows) {
            if p.iso.rank() - p.seed.rank() >= p.target {
                continue;
            }
            inc += p.iso.dimension() * p.iso.insert_rows(r);
        }
        inc
    }

    /// Inserts a generator, skipping components already at their target;
    /// returns the dimension increase.
    pub fn add(&mut self, g: &Generator) -> usize {
        let mut inc = 0;
        for p in &mut self.parts {
            if p.iso.rank() - p.seed.rank() < p.target {
                inc += p.iso.dimension() * p.iso.add(g);
            }
        }
        inc
    }

    /// Forgets every generator, keeping the symmetries.
    pub fn reset(&mut self) {
        for p in &mut self.parts {
            p.iso.set_basis(p.seed.clone());
        }
    }

    /// Dimension of the module generated by a subset of precomputed rows.
    pub fn dimension_of(&mut self, rows: &[&Vec<Vec<Vec<u32>>>]) -> usize {
        self.reset();
        for r in rows {
            self.insert_rows(r);
        }
        self.dimension()
    }
}
