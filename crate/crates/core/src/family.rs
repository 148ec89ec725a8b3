//! Finite descriptions of graph sequences and their symbolic evaluators.
//!
//! A family fixes the whole sequence `<G_n>` with finitely many data: a
//! constant graph, an explicit periodic list of graphs, a parametric kind
//! (path/cycle/complete/star) whose size is an ultimately periodic
//! polynomial sequence, or the one-way infinite path. Evaluators return
//! exact truth sets and value sequences — pointwise equal to what the
//! per-index graph algorithms compute, at every index, not merely a.e.
//!
//! Vertices of the `n`-th graph are `0..p_n`: paths and cycles in path
//! order, the star hub at index 0, the infinite path indexed by all of N.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::graph::{FiniteGraph, GraphError};
use crate::upalg::{Rel, UpAlgError, UpSet, UppSeq};

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum FamilyError {
    #[error("the infinite-path family has no finite materialization")]
    InfiniteGraph,
    #[error("windows exist only on the infinite-path family")]
    NotInfinitePath,
    #[error("window bounds must satisfy lo <= hi")]
    WindowBounds,
    #[error("size sequence falls below the kind minimum {minimum} at index {index}")]
    SizeBelowMinimum { minimum: u64, index: u64 },
    #[error("sequence value at index {index} does not fit a vertex index")]
    SizeOverflow { index: u64 },
    #[error("selector is out of the vertex range at index {index} (and on that whole residue class beyond the threshold)")]
    InvalidSelector { index: u64 },
    #[error("explicit cycle must be nonempty")]
    EmptyExplicitCycle,
    #[error("family is disconnected almost everywhere")]
    DisconnectedAlmostEverywhere,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    UpAlg(#[from] UpAlgError),
}

/// Finite description of a sequence of graphs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphFamily {
    Constant(FiniteGraph),
    ExplicitPeriodic {
        prefix: Vec<FiniteGraph>,
        cycle: Vec<FiniteGraph>,
    },
    Path(UppSeq),
    Cycle(UppSeq),
    Complete(UppSeq),
    Star(UppSeq),
    InfinitePath,
}

/// Graph properties whose truth sets `{n : G_n has it}` are computed
/// exactly.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Property {
    Connected,
    Eulerian,
    Dirac,
    Ore,
    Posa,
    DegreesBoundedBy(u64),
}

/// First index outside the set: a prefix gap or a missing residue class.
pub(crate) fn first_non_member(set: &UpSet) -> Option<u64> {
    (0..set.threshold())
        .find(|&n| !set.contains(n))
        .or_else(|| (set.threshold()..set.threshold() + set.modulus()).find(|&n| !set.contains(n)))
}

/// Every index must materialize (`mat_min`), and the kind minimum must hold
/// at all but finitely many indices: a residue class that stays below it is
/// rejected, finitely many small violations are tolerated as explicit
/// exceptions.
fn validate_size(size: &UppSeq, mat_min: u64, kind_min: u64) -> Result<(), FamilyError> {
    size.check_natural().map_err(FamilyError::from)?;
    let mat_ok = UppSeq::constant(BigInt::from(mat_min)).relate(size, Rel::Le)?;
    if let Some(index) = first_non_member(&mat_ok) {
        return Err(FamilyError::SizeBelowMinimum {
            minimum: mat_min,
            index,
        });
    }
    if kind_min > mat_min {
        let kind_ok = UppSeq::constant(BigInt::from(kind_min)).relate(size, Rel::Le)?;
        if !kind_ok.is_cofinite() {
            let index =
                first_non_member(&kind_ok).expect("a non-cofinite set misses some index");
            return Err(FamilyError::SizeBelowMinimum {
                minimum: kind_min,
                index,
            });
        }
    }
    Ok(())
}

fn to_index(value: &BigInt, index: u64) -> Result<usize, FamilyError> {
    value
        .to_usize()
        .ok_or(FamilyError::SizeOverflow { index })
}

impl GraphFamily {
    /// Sizes must reach the kind minimum 2 on every residue class
    /// eventually; finitely many smaller indices stand as explicit
    /// single-vertex exceptions.
    pub fn path_family(size: UppSeq) -> Result<Self, FamilyError> {
        validate_size(&size, 1, 2)?;
        Ok(GraphFamily::Path(size))
    }

    pub fn cycle_family(size: UppSeq) -> Result<Self, FamilyError> {
        validate_size(&size, 3, 3)?;
        Ok(GraphFamily::Cycle(size))
    }

    pub fn complete_family(size: UppSeq) -> Result<Self, FamilyError> {
        validate_size(&size, 1, 2)?;
        Ok(GraphFamily::Complete(size))
    }

    pub fn star_family(leaf_count: UppSeq) -> Result<Self, FamilyError> {
        validate_size(&leaf_count, 0, 1)?;
        Ok(GraphFamily::Star(leaf_count))
    }

    pub fn explicit_periodic(
        prefix: Vec<FiniteGraph>,
        cycle: Vec<FiniteGraph>,
    ) -> Result<Self, FamilyError> {
        if cycle.is_empty() {
            return Err(FamilyError::EmptyExplicitCycle);
        }
        Ok(GraphFamily::ExplicitPeriodic { prefix, cycle })
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            GraphFamily::Constant(_) => "constant",
            GraphFamily::ExplicitPeriodic { .. } => "explicit",
            GraphFamily::Path(_) => "path",
            GraphFamily::Cycle(_) => "cycle",
            GraphFamily::Complete(_) => "complete",
            GraphFamily::Star(_) => "star",
            GraphFamily::InfinitePath => "infinite_path",
        }
    }

    /// A hyperfinite family materializes a finite graph at every index.
    pub fn is_hyperfinite(&self) -> bool {
        !matches!(self, GraphFamily::InfinitePath)
    }

    fn size_param(&self) -> Option<&UppSeq> {
        match self {
            GraphFamily::Path(s)
            | GraphFamily::Cycle(s)
            | GraphFamily::Complete(s)
            | GraphFamily::Star(s) => Some(s),
            _ => None,
        }
    }

    fn explicit_parts(&self) -> Option<(&[FiniteGraph], &[FiniteGraph])> {
        match self {
            GraphFamily::Constant(g) => Some((&[], core::slice::from_ref(g))),
            GraphFamily::ExplicitPeriodic { prefix, cycle } => Some((prefix, cycle)),
            _ => None,
        }
    }

    /// Index threshold and period after which the family repeats its
    /// structure; anchor-progression sampling starts beyond the threshold.
    pub fn structure(&self) -> (u64, u64) {
        if let Some(size) = self.size_param() {
            (size.threshold(), size.cycle_len())
        } else if let Some((prefix, cycle)) = self.explicit_parts() {
            (prefix.len() as u64, cycle.len() as u64)
        } else {
            (0, 1)
        }
    }

    /// The concrete `n`-th graph of the sequence.
    pub fn graph_at(&self, n: u64) -> Result<FiniteGraph, FamilyError> {
        if let Some((prefix, cycle)) = self.explicit_parts() {
            let g = if n < prefix.len() as u64 {
                &prefix[n as usize]
            } else {
                &cycle[((n - prefix.len() as u64) % cycle.len() as u64) as usize]
            };
            return Ok(g.clone());
        }
        let size = match self {
            GraphFamily::InfinitePath => return Err(FamilyError::InfiniteGraph),
            _ => self.size_param().expect("parametric kinds carry a size"),
        };
        let f = to_index(&size.term(n), n)?;
        let g = match self {
            GraphFamily::Path(_) => FiniteGraph::path(f),
            GraphFamily::Cycle(_) => FiniteGraph::cycle(f),
            GraphFamily::Complete(_) => FiniteGraph::complete(f),
            GraphFamily::Star(_) => FiniteGraph::star(f),
            _ => unreachable!(),
        };
        Ok(g?)
    }

    /// Finite window of the infinite path: the subpath induced by vertex
    /// indices `lo..=hi`, relabeled to `0..=hi-lo`.
    pub fn window_at(&self, lo: u64, hi: u64) -> Result<FiniteGraph, FamilyError> {
        if !matches!(self, GraphFamily::InfinitePath) {
            return Err(FamilyError::NotInfinitePath);
        }
        if lo > hi {
            return Err(FamilyError::WindowBounds);
        }
        Ok(FiniteGraph::path((hi - lo + 1) as usize)?)
    }

    /// Exact vertex- and edge-count sequences `(|X_n|, |B_n|)`.
    pub fn size_sequences(&self) -> Result<(UppSeq, UppSeq), FamilyError> {
        if let Some((_, _)) = self.explicit_parts() {
            let p = self.per_index_value(&[], |g, _| Ok(BigInt::from(g.vertex_count())))?;
            let q = self.per_index_value(&[], |g, _| Ok(BigInt::from(g.edge_count())))?;
            return Ok((p, q));
        }
        let one = UppSeq::constant_int(1);
        match self {
            GraphFamily::Path(f) => Ok((f.clone(), f.sub(&one))),
            GraphFamily::Cycle(f) => Ok((f.clone(), f.clone())),
            GraphFamily::Complete(f) => {
                let q = f.mul(&f.sub(&one)).floor_half()?;
                Ok((f.clone(), q))
            }
            GraphFamily::Star(f) => Ok((f.add(&one), f.clone())),
            GraphFamily::InfinitePath => Err(FamilyError::InfiniteGraph),
            _ => unreachable!("explicit kinds handled above"),
        }
    }

    /// A selector is valid when its value is a vertex index at every single
    /// index of the sequence, prefix included.
    pub fn validate_selector(&self, x: &VertexSelector) -> Result<(), FamilyError> {
        if matches!(self, GraphFamily::InfinitePath) {
            return Ok(());
        }
        let (p, _) = self.size_sequences()?;
        let in_range = x.seq.relate(&p, Rel::Lt)?;
        match first_non_member(&in_range) {
            None => Ok(()),
            Some(index) => Err(FamilyError::InvalidSelector { index }),
        }
    }

    /// Exact truth set `{n : {x_n, y_n} ∈ B_n}`.
    pub fn edge_set(
        &self,
        x: &VertexSelector,
        y: &VertexSelector,
    ) -> Result<UpSet, FamilyError> {
        self.validate_selector(x)?;
        self.validate_selector(y)?;
        let one = UppSeq::constant_int(1);
        match self {
            GraphFamily::Path(_) | GraphFamily::InfinitePath => {
                // adjacent along the path iff |x - y| = 1
                let right = x.seq.relate(&y.seq.add(&one), Rel::Eq)?;
                let left = y.seq.relate(&x.seq.add(&one), Rel::Eq)?;
                Ok(right.union(&left))
            }
            GraphFamily::Cycle(f) => {
                // |x - y| is 1 or f - 1 around the cycle
                let right = x.seq.relate(&y.seq.add(&one), Rel::Eq)?;
                let left = y.seq.relate(&x.seq.add(&one), Rel::Eq)?;
                let wrap_hi = x.seq.add(&one).relate(&y.seq.add(f), Rel::Eq)?;
                let wrap_lo = y.seq.add(&one).relate(&x.seq.add(f), Rel::Eq)?;
                Ok(right.union(&left).union(&wrap_hi).union(&wrap_lo))
            }
            GraphFamily::Complete(_) => Ok(x.seq.relate(&y.seq, Rel::Eq)?.complement()),
            GraphFamily::Star(_) => {
                let x_hub = x.seq.relate(&UppSeq::constant_int(0), Rel::Eq)?;
                let y_hub = y.seq.relate(&UppSeq::constant_int(0), Rel::Eq)?;
                Ok(x_hub
                    .intersect(&y_hub.complement())
                    .union(&y_hub.intersect(&x_hub.complement())))
            }
            _ => self.per_index_truth(&[x, y], |g, v| g.has_edge(v[0], v[1])),
        }
    }

    /// Exact degree sequence `<d_{x_n}>`.
    pub fn degree_seq(&self, x: &VertexSelector) -> Result<UppSeq, FamilyError> {
        self.validate_selector(x)?;
        let zero = UppSeq::constant_int(0);
        let one = UppSeq::constant_int(1);
        let two = UppSeq::constant_int(2);
        match self {
            GraphFamily::InfinitePath => {
                // degree 1 at vertex 0, else 2
                let at_origin = UppSeq::indicator(&x.seq.relate(&zero, Rel::Eq)?);
                Ok(two.sub(&at_origin))
            }
            GraphFamily::Path(f) => {
                let at_origin = UppSeq::indicator(&x.seq.relate(&zero, Rel::Eq)?);
                let at_end = UppSeq::indicator(&x.seq.relate(&f.sub(&one), Rel::Eq)?);
                Ok(two.sub(&at_origin).sub(&at_end))
            }
            GraphFamily::Cycle(_) => Ok(two),
            GraphFamily::Complete(f) => Ok(f.sub(&one)),
            GraphFamily::Star(f) => {
                // hub degree f, leaf degree 1
                let at_hub = UppSeq::indicator(&x.seq.relate(&zero, Rel::Eq)?);
                Ok(one.add(&f.sub(&one).mul(&at_hub)))
            }
            _ => self.per_index_value(&[x], |g, v| Ok(BigInt::from(g.degree(v[0])))),
        }
    }

    /// Exact shortest-distance sequence `<d(x_n, y_n)>`; requires the family
    /// to be connected on a large index set. Indices where the two vertices
    /// are unreachable (necessarily a decision-irrelevant set) carry 0.
    pub fn distance_seq(
        &self,
        x: &VertexSelector,
        y: &VertexSelector,
        filter: &crate::upalg::AnchoredUltrafilter,
    ) -> Result<UppSeq, FamilyError> {
        self.validate_selector(x)?;
        self.validate_selector(y)?;
        if self.is_hyperfinite() && !filter.decide(&self.property_set(Property::Connected)?) {
            return Err(FamilyError::DisconnectedAlmostEverywhere);
        }
        match self {
            GraphFamily::Path(_) | GraphFamily::InfinitePath => {
                Ok(x.seq.sub(&y.seq).abs()?)
            }
            GraphFamily::Cycle(f) => {
                let around = x.seq.sub(&y.seq).abs()?;
                let other_way = f.sub(&around);
                Ok(around.min_pointwise(&other_way)?)
            }
            GraphFamily::Complete(_) => {
                Ok(UppSeq::indicator(&x.seq.relate(&y.seq, Rel::Eq)?.complement()))
            }
            GraphFamily::Star(_) => {
                // 0 when equal, 1 across a hub edge, 2 between leaves
                let differ = UppSeq::indicator(&x.seq.relate(&y.seq, Rel::Eq)?.complement());
                let through_edge = UppSeq::indicator(&self.edge_set(x, y)?);
                Ok(UppSeq::constant_int(2).mul(&differ).sub(&through_edge))
            }
            _ => self.per_index_value(&[x, y], |g, v| {
                Ok(BigInt::from(g.shortest_distance(v[0], v[1]).unwrap_or(0)))
            }),
        }
    }

    /// Exact truth set `{n : G_n has the property}`.
    pub fn property_set(&self, property: Property) -> Result<UpSet, FamilyError> {
        let full = Ok(UpSet::full());
        let empty = Ok(UpSet::empty());
        let size = match self {
            GraphFamily::InfinitePath => return Err(FamilyError::InfiniteGraph),
            GraphFamily::Constant(_) | GraphFamily::ExplicitPeriodic { .. } => {
                return self.per_index_truth(&[], |g, _| match property {
                    Property::Connected => g.is_connected(),
                    Property::Eulerian => g.is_eulerian(),
                    Property::Dirac => g.vertex_count() >= 3 && g.hamiltonian_criteria().map(|c| c.dirac).unwrap_or(false),
                    Property::Ore => g.vertex_count() >= 3 && g.hamiltonian_criteria().map(|c| c.ore).unwrap_or(false),
                    Property::Posa => g.vertex_count() >= 3 && g.hamiltonian_criteria().map(|c| c.posa).unwrap_or(false),
                    Property::DegreesBoundedBy(k) => g.max_degree() as u64 <= k,
                });
            }
            _ => self.size_param().expect("parametric kinds carry a size"),
        };
        let le = |bound: u64| -> Result<UpSet, FamilyError> {
            Ok(size.relate(&UppSeq::constant(BigInt::from(bound)), Rel::Le)?)
        };
        let ge = |bound: u64| -> Result<UpSet, FamilyError> {
            Ok(UppSeq::constant(BigInt::from(bound)).relate(size, Rel::Le)?)
        };
        match (self, property) {
            // every size respecting the kind minimum yields a connected graph
            (_, Property::Connected) => full,

            // endpoints of degree 1 rule paths out, except the degenerate
            // single vertex (trivially Eulerian)
            (GraphFamily::Path(_), Property::Eulerian) => {
                Ok(size.relate(&UppSeq::constant_int(1), Rel::Eq)?)
            }
            (GraphFamily::Star(_), Property::Eulerian) => {
                Ok(size.relate(&UppSeq::constant_int(0), Rel::Eq)?)
            }
            (GraphFamily::Cycle(_), Property::Eulerian) => full,
            // complete graphs have even degrees exactly at odd sizes
            (GraphFamily::Complete(_), Property::Eulerian) => {
                Ok(size.even_set()?.complement())
            }

            // path and star always keep a degree-1 vertex below half the order
            (GraphFamily::Path(_) | GraphFamily::Star(_), Property::Dirac | Property::Ore | Property::Posa) => empty,
            // on cycles all three criteria come down to order at most 4
            (GraphFamily::Cycle(_), Property::Dirac | Property::Ore | Property::Posa) => le(4),
            // complete graphs satisfy all three as soon as they are big enough
            (GraphFamily::Complete(_), Property::Dirac | Property::Ore | Property::Posa) => ge(3),

            (GraphFamily::Path(_), Property::DegreesBoundedBy(k)) => match k {
                0 => Ok(size.relate(&UppSeq::constant_int(1), Rel::Le)?),
                1 => Ok(size.relate(&UppSeq::constant_int(2), Rel::Le)?),
                _ => full,
            },
            (GraphFamily::Cycle(_), Property::DegreesBoundedBy(k)) => {
                if k >= 2 {
                    full
                } else {
                    empty
                }
            }
            (GraphFamily::Complete(_), Property::DegreesBoundedBy(k)) => le(k + 1),
            (GraphFamily::Star(_), Property::DegreesBoundedBy(k)) => le(k),

            _ => unreachable!("explicit kinds handled above"),
        }
    }

    /// Maximum vertex degree of `G_n`, as an exact sequence.
    pub fn max_degree_seq(&self) -> Result<UppSeq, FamilyError> {
        let one = UppSeq::constant_int(1);
        match self {
            GraphFamily::InfinitePath => Err(FamilyError::InfiniteGraph),
            GraphFamily::Path(f) => {
                // max degree is 0 on a single vertex, 1 on two, 2 beyond
                let two_vertices = f.relate(&UppSeq::constant_int(2), Rel::Eq)?;
                let one_vertex = f.relate(&UppSeq::constant_int(1), Rel::Eq)?;
                Ok(UppSeq::constant_int(2)
                    .sub(&UppSeq::indicator(&two_vertices))
                    .sub(&UppSeq::constant_int(2).mul(&UppSeq::indicator(&one_vertex))))
            }
            GraphFamily::Cycle(_) => Ok(UppSeq::constant_int(2)),
            GraphFamily::Complete(f) => Ok(f.sub(&one)),
            GraphFamily::Star(f) => Ok(f.clone()),
            _ => self.per_index_value(&[], |g, _| Ok(BigInt::from(g.max_degree()))),
        }
    }

    /// Aligned per-index evaluation for explicit kinds: beyond the combined
    /// threshold every selector is constant on each residue class (a valid
    /// bounded polynomial selector must be), so one representative index
    /// per class decides the class.
    fn aligned_explicit(
        &self,
        selectors: &[&VertexSelector],
    ) -> Result<(u64, u64), FamilyError> {
        let (prefix, cycle) = self
            .explicit_parts()
            .expect("only explicit kinds take the per-index route");
        let mut threshold = prefix.len() as u64;
        let mut period = cycle.len() as u64;
        for sel in selectors {
            threshold = threshold.max(sel.seq.threshold());
            period = num_integer::lcm(period, sel.seq.cycle_len());
        }
        Ok((threshold, period))
    }

    fn per_index_truth(
        &self,
        selectors: &[&VertexSelector],
        eval: impl Fn(&FiniteGraph, &[usize]) -> bool,
    ) -> Result<UpSet, FamilyError> {
        let (threshold, period) = self.aligned_explicit(selectors)?;
        let eval_at = |n: u64| -> Result<bool, FamilyError> {
            let g = self.graph_at(n)?;
            let values = selectors
                .iter()
                .map(|s| to_index(&s.seq.term(n), n))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(eval(&g, &values))
        };
        let mut pattern = alloc::collections::BTreeSet::new();
        for j in 0..period {
            let n = threshold + j;
            debug_assert_eq!(
                selectors.iter().map(|s| s.seq.term(n)).collect::<Vec<_>>(),
                selectors.iter().map(|s| s.seq.term(n + period)).collect::<Vec<_>>(),
                "selectors must be constant on aligned classes"
            );
            if eval_at(n)? {
                pattern.insert(n % period);
            }
        }
        let prefix = (0..threshold)
            .map(eval_at)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UpSet::new(threshold, period, pattern, prefix)?)
    }

    fn per_index_value(
        &self,
        selectors: &[&VertexSelector],
        eval: impl Fn(&FiniteGraph, &[usize]) -> Result<BigInt, FamilyError>,
    ) -> Result<UppSeq, FamilyError> {
        let (threshold, period) = self.aligned_explicit(selectors)?;
        let eval_at = |n: u64| -> Result<BigInt, FamilyError> {
            let g = self.graph_at(n)?;
            let values = selectors
                .iter()
                .map(|s| to_index(&s.seq.term(n), n))
                .collect::<Result<Vec<_>, _>>()?;
            eval(&g, &values)
        };
        let mut cycle = Vec::with_capacity(period as usize);
        for j in 0..period {
            let n = threshold + j;
            let value = eval_at(n)?;
            debug_assert_eq!(value, eval_at(n + period)?, "class values must repeat");
            cycle.push(crate::upalg::Poly::constant(
                num_rational::BigRational::from_integer(value),
            ));
        }
        let prefix = (0..threshold)
            .map(eval_at)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UppSeq::new(threshold, cycle, prefix)?)
    }
}

/// A representative `<x_n>` of a nonstandard vertex: a natural-valued
/// ultimately periodic sequence of vertex indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSelector {
    seq: UppSeq,
}

impl VertexSelector {
    pub fn new(seq: UppSeq) -> Result<Self, FamilyError> {
        seq.check_natural().map_err(FamilyError::from)?;
        Ok(VertexSelector { seq })
    }

    pub fn constant(index: u64) -> Self {
        VertexSelector {
            seq: UppSeq::constant(BigInt::from(index)),
        }
    }

    pub fn parse_poly_text(text: &str) -> Result<Self, FamilyError> {
        VertexSelector::new(UppSeq::parse_poly_text(text)?)
    }

    pub fn seq(&self) -> &UppSeq {
        &self.seq
    }

    pub fn value_at(&self, n: u64) -> BigInt {
        self.seq.term(n)
    }

    pub fn index_at(&self, n: u64) -> Result<usize, FamilyError> {
        to_index(&self.seq.term(n), n)
    }
}
