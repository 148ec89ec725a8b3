//! The nonstandard graph layer.
//!
//! Vertices of the nonstandard graph are equivalence classes of selector
//! sequences modulo a.e. equality; edges exist exactly when the pointwise
//! edge set is large. Every decided operation takes the anchored
//! ultrafilter as an explicit parameter and reduces to exact set algebra
//! from the family evaluators, so decisions agree with the per-index truth
//! on the anchor progression by construction.

use alloc::rc::Rc;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::family::{FamilyError, GraphFamily, Property, VertexSelector};
use crate::graph::Walk;
use crate::upalg::{AnchoredUltrafilter, Hypernatural, Rel, UpAlgError, UpSet, UppSeq};

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum NsError {
    #[error("operands belong to different families")]
    FamilyMismatch,
    #[error("no hyperfinite path exists: the family is disconnected almost everywhere")]
    NoPath,
    #[error("a path needs distinct endpoints")]
    IdenticalEndpoints,
    #[error("invalid vertex-index range: {0}")]
    InvalidRange(&'static str),
    #[error("operation requires a hyperfinite connected family with at least two vertices and one edge a.e.")]
    NotHyperfiniteConnected,
    #[error("operation requires a hyperfinite family")]
    NotHyperfinite,
    #[error("family has fewer than three vertices almost everywhere")]
    FewerThanThreeVerticesAE,
    #[error("operation applies to constant families only")]
    NotConstantFamily,
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    UpAlg(#[from] UpAlgError),
}

/// Which sufficient Hamiltonicity condition to decide.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HamiltonianCriterion {
    Dirac,
    Ore,
    Posa,
}

impl HamiltonianCriterion {
    fn property(self) -> Property {
        match self {
            HamiltonianCriterion::Dirac => Property::Dirac,
            HamiltonianCriterion::Ore => Property::Ore,
            HamiltonianCriterion::Posa => Property::Posa,
        }
    }
}

/// A nonstandard vertex: one representative selector bound to its family.
#[derive(Clone, Debug)]
pub struct NsVertex {
    family: Rc<GraphFamily>,
    selector: VertexSelector,
}

impl NsVertex {
    pub fn new(family: Rc<GraphFamily>, selector: VertexSelector) -> Result<Self, NsError> {
        family.validate_selector(&selector)?;
        Ok(NsVertex { family, selector })
    }

    pub fn family(&self) -> &Rc<GraphFamily> {
        &self.family
    }

    pub fn selector(&self) -> &VertexSelector {
        &self.selector
    }
}

/// A nonstandard edge; constructed only through [`mk_ns_edge`], which
/// guarantees the endpoints are adjacent a.e.
#[derive(Clone, Debug)]
pub struct NsEdge {
    x: NsVertex,
    y: NsVertex,
}

impl NsEdge {
    pub fn endpoints(&self) -> (&NsVertex, &NsVertex) {
        (&self.x, &self.y)
    }
}

fn require_same_family(x: &NsVertex, y: &NsVertex) -> Result<(), NsError> {
    if x.family == y.family {
        Ok(())
    } else {
        Err(NsError::FamilyMismatch)
    }
}

fn equality_set(x: &NsVertex, y: &NsVertex) -> Result<UpSet, NsError> {
    Ok(x.selector.seq().relate(y.selector.seq(), Rel::Eq)?)
}

/// Decided a.e. equality of nonstandard vertices.
pub fn ns_vertex_eq(
    x: &NsVertex,
    y: &NsVertex,
    filter: &AnchoredUltrafilter,
) -> Result<bool, NsError> {
    require_same_family(x, y)?;
    Ok(filter.decide(&equality_set(x, y)?))
}

/// `Some(edge)` iff `{n : {x_n, y_n} ∈ B_n}` is large; `None` is the
/// complement branch (not an edge).
pub fn mk_ns_edge(
    x: &NsVertex,
    y: &NsVertex,
    filter: &AnchoredUltrafilter,
) -> Result<Option<NsEdge>, NsError> {
    require_same_family(x, y)?;
    let set = x.family.edge_set(&x.selector, &y.selector)?;
    Ok(filter.decide(&set).then(|| NsEdge {
        x: x.clone(),
        y: y.clone(),
    }))
}

/// Decided incidence `{n : v_n ∈ b_n} ∈ F`.
pub fn incident(
    v: &NsVertex,
    edge: &NsEdge,
    filter: &AnchoredUltrafilter,
) -> Result<bool, NsError> {
    require_same_family(v, &edge.x)?;
    let hits = equality_set(v, &edge.x)?.union(&equality_set(v, &edge.y)?);
    Ok(filter.decide(&hits))
}

/// Vertex adjacency: an edge through the two vertices exists.
pub fn adjacent_vertices(
    x: &NsVertex,
    y: &NsVertex,
    filter: &AnchoredUltrafilter,
) -> Result<bool, NsError> {
    Ok(mk_ns_edge(x, y, filter)?.is_some())
}

/// Edge adjacency: some endpoint of one is a.e. equal to an endpoint of the
/// other, which is exactly `{n : b_n ∩ c_n ≠ ∅} ∈ F`.
pub fn adjacent_edges(
    b: &NsEdge,
    c: &NsEdge,
    filter: &AnchoredUltrafilter,
) -> Result<bool, NsError> {
    require_same_family(&b.x, &c.x)?;
    let shared = equality_set(&b.x, &c.x)?
        .union(&equality_set(&b.x, &c.y)?)
        .union(&equality_set(&b.y, &c.x)?)
        .union(&equality_set(&b.y, &c.y)?);
    Ok(filter.decide(&shared))
}

/// Decided equality of nonstandard edges as two-element vertex sets.
pub fn ns_edge_eq(
    b: &NsEdge,
    c: &NsEdge,
    filter: &AnchoredUltrafilter,
) -> Result<bool, NsError> {
    require_same_family(&b.x, &c.x)?;
    let direct = equality_set(&b.x, &c.x)?.intersect(&equality_set(&b.y, &c.y)?);
    let crossed = equality_set(&b.x, &c.y)?.intersect(&equality_set(&b.y, &c.x)?);
    Ok(filter.decide(&direct.union(&crossed)))
}

/// A hyperfinite path: exact hypernatural length plus a per-index witness
/// generator (paths of unlimited length cannot be stored, but any single
/// index can be checked).
#[derive(Clone, Debug)]
pub struct NsPath {
    from: NsVertex,
    to: NsVertex,
    length: Hypernatural,
}

impl NsPath {
    pub fn endpoints(&self) -> (&NsVertex, &NsVertex) {
        (&self.from, &self.to)
    }

    pub fn length(&self) -> &Hypernatural {
        &self.length
    }

    /// The concrete shortest path in `G_n` between the selector values,
    /// BFS with lowest-index tie-breaking.
    pub fn witness_at(&self, n: u64) -> Result<Walk, NsError> {
        let a = self.from.selector.index_at(n)?;
        let b = self.to.selector.index_at(n)?;
        let graph = match self.from.family.as_ref() {
            GraphFamily::InfinitePath => self.from.family.window_at(0, (a.max(b)) as u64)?,
            fam => fam.graph_at(n)?,
        };
        graph.shortest_path(a, b).map_err(|e| FamilyError::from(e).into())
    }
}

/// Hyperfinite path between two distinct vertices of an a.e.-connected
/// family.
pub fn ns_path_between(
    x: &NsVertex,
    y: &NsVertex,
    filter: &AnchoredUltrafilter,
) -> Result<NsPath, NsError> {
    require_same_family(x, y)?;
    if ns_vertex_eq(x, y, filter)? {
        return Err(NsError::IdenticalEndpoints);
    }
    let length = ns_distance(x, y, filter)?;
    Ok(NsPath {
        from: x.clone(),
        to: y.clone(),
        length,
    })
}

/// Exact hypernatural distance; `d(x, x) = 0`.
pub fn ns_distance(
    x: &NsVertex,
    y: &NsVertex,
    filter: &AnchoredUltrafilter,
) -> Result<Hypernatural, NsError> {
    require_same_family(x, y)?;
    let seq = x
        .family
        .distance_seq(&x.selector, &y.selector, filter)
        .map_err(|e| match e {
            FamilyError::DisconnectedAlmostEverywhere => NsError::NoPath,
            other => NsError::Family(other),
        })?;
    Ok(Hypernatural::new(seq)?)
}

/// Decided connectedness of the nonstandard graph.
pub fn ns_connected(family: &GraphFamily, filter: &AnchoredUltrafilter) -> Result<bool, NsError> {
    if matches!(family, GraphFamily::InfinitePath) {
        // the one-way infinite path joins any two vertices by a finite path
        return Ok(true);
    }
    Ok(filter.decide(&family.property_set(Property::Connected)?))
}

fn require_all(set: &UpSet, message: &'static str) -> Result<(), NsError> {
    if crate::family::first_non_member(set).is_none() {
        Ok(())
    } else {
        Err(NsError::InvalidRange(message))
    }
}

/// Path family when the size clears the kind minimum everywhere, a single
/// vertex when it is constantly 1.
fn path_or_single(size: UppSeq) -> Result<GraphFamily, NsError> {
    if size.is_constant_value().map(|v| v == 1.into()).unwrap_or(false) {
        return Ok(GraphFamily::Constant(
            crate::graph::FiniteGraph::path(1).expect("single vertex"),
        ));
    }
    GraphFamily::path_family(size).map_err(|_| {
        NsError::InvalidRange("an induced path must keep at least two vertices on every residue class (or exactly one everywhere)")
    })
}

/// The family whose `n`-th graph is the subgraph of `G_n` induced by vertex
/// indices `lo(n)..=hi(n)`.
pub fn induced_subfamily(
    family: &GraphFamily,
    lo: &UppSeq,
    hi: &UppSeq,
) -> Result<GraphFamily, NsError> {
    lo.check_natural()?;
    hi.check_natural()?;
    require_all(&lo.relate(hi, Rel::Le)?, "bounds must satisfy lo <= hi at every index")?;
    let one = UppSeq::constant_int(1);
    let width = hi.sub(lo).add(&one);
    match family {
        GraphFamily::InfinitePath => path_or_single(width),
        GraphFamily::Path(size) | GraphFamily::Complete(size) => {
            require_all(
                &hi.relate(size, Rel::Lt)?,
                "upper bound must stay below the vertex count at every index",
            )?;
            match family {
                GraphFamily::Path(_) => path_or_single(width),
                _ => {
                    if width.is_constant_value().map(|v| v == 1.into()).unwrap_or(false) {
                        Ok(GraphFamily::Constant(
                            crate::graph::FiniteGraph::path(1).expect("single vertex"),
                        ))
                    } else {
                        GraphFamily::complete_family(width).map_err(|_| {
                            NsError::InvalidRange("an induced complete graph must keep at least two vertices on every residue class (or exactly one everywhere)")
                        })
                    }
                }
            }
        }
        GraphFamily::Cycle(size) => {
            require_all(
                &hi.relate(size, Rel::Lt)?,
                "upper bound must stay below the vertex count at every index",
            )?;
            if width.relate(size, Rel::Eq)?.is_full() {
                return Ok(GraphFamily::Cycle(size.clone()));
            }
            if width.relate(size, Rel::Lt)?.is_full() {
                // a proper arc of the cycle is a path
                return path_or_single(width);
            }
            Err(NsError::InvalidRange(
                "range must select a proper arc everywhere or the whole cycle everywhere",
            ))
        }
        GraphFamily::Star(leaves) => {
            let count = leaves.add(&one);
            require_all(
                &hi.relate(&count, Rel::Lt)?,
                "upper bound must stay below the vertex count at every index",
            )?;
            if lo.is_constant_value().map(|v| v == 0.into()).unwrap_or(false) {
                // hub kept: a star on hi leaves
                if hi.is_constant_value().map(|v| v == 0.into()).unwrap_or(false) {
                    return Ok(GraphFamily::Constant(
                        crate::graph::FiniteGraph::path(1).expect("single vertex"),
                    ));
                }
                return GraphFamily::star_family(hi.clone()).map_err(|_| {
                    NsError::InvalidRange("an induced star must keep at least one leaf on every residue class (or none everywhere)")
                });
            }
            // hub dropped: leaves only, edgeless — representable only as one vertex
            if width.is_constant_value().map(|v| v == 1.into()).unwrap_or(false) {
                return Ok(GraphFamily::Constant(
                    crate::graph::FiniteGraph::path(1).expect("single vertex"),
                ));
            }
            Err(NsError::InvalidRange(
                "dropping the hub leaves an edgeless graph, which no family kind represents",
            ))
        }
        GraphFamily::Constant(_) | GraphFamily::ExplicitPeriodic { .. } => {
            let (p_seq, _) = family.size_sequences()?;
            require_all(
                &hi.relate(&p_seq, Rel::Lt)?,
                "upper bound must stay below the vertex count at every index",
            )?;
            let (threshold, period) = family.structure();
            let threshold = threshold.max(lo.threshold()).max(hi.threshold());
            let period = num_integer::lcm(
                period,
                num_integer::lcm(lo.cycle_len(), hi.cycle_len()),
            );
            let cut = |n: u64| -> Result<crate::graph::FiniteGraph, NsError> {
                let g = family.graph_at(n)?;
                let a = lo.term(n).to_usize().ok_or(FamilyError::SizeOverflow { index: n })?;
                let b = hi.term(n).to_usize().ok_or(FamilyError::SizeOverflow { index: n })?;
                Ok(g.induced(&(a..=b).collect()).map_err(FamilyError::from)?)
            };
            let prefix = (0..threshold).map(&cut).collect::<Result<Vec<_>, _>>()?;
            let cycle = (threshold..threshold + period)
                .map(&cut)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(GraphFamily::explicit_periodic(prefix, cycle)?)
        }
    }
}

/// Decided summary of a hyperfinite connected nonstandard graph.
#[derive(Clone, Debug)]
pub struct NsGraphSummary {
    pub vertex_count: Hypernatural,
    pub edge_count: Hypernatural,
    pub cyclomatic: Hypernatural,
    pub radius: Hypernatural,
    pub diameter: Hypernatural,
    pub connected: bool,
    pub eulerian: bool,
    pub dirac: bool,
    pub ore: bool,
    pub posa: bool,
    /// `q - |B_T|` along a spanning tree agrees with `q - p + 1`, decided.
    pub cyclomatic_consistent: bool,
    /// `p - 1 <= q <= p(p-1)/2`, decided.
    pub size_bounds_hold: bool,
    /// `R <= D <= 2R`, decided.
    pub radius_diameter_hold: bool,
}

/// Exact radius and diameter sequences per family kind.
fn radius_diameter_seqs(family: &GraphFamily) -> Result<(UppSeq, UppSeq), NsError> {
    let one = UppSeq::constant_int(1);
    match family {
        GraphFamily::Path(f) => Ok((f.floor_half()?, f.sub(&one))),
        GraphFamily::Cycle(f) => {
            let half = f.floor_half()?;
            Ok((half.clone(), half))
        }
        GraphFamily::Complete(f) => {
            // a single vertex has radius 0, everything larger radius 1
            let r = f.sub(&one).min_pointwise(&one)?;
            Ok((r.clone(), r))
        }
        GraphFamily::Star(f) => {
            let radius = f.min_pointwise(&one)?;
            let diameter = f.min_pointwise(&UppSeq::constant_int(2))?;
            Ok((radius, diameter))
        }
        GraphFamily::Constant(_) | GraphFamily::ExplicitPeriodic { .. } => {
            let radius = per_index_metric(family, |g| {
                g.eccentricity_radius_diameter().map(|(_, r, _)| r).unwrap_or(0)
            })?;
            let diameter = per_index_metric(family, |g| {
                g.eccentricity_radius_diameter().map(|(_, _, d)| d).unwrap_or(0)
            })?;
            Ok((radius, diameter))
        }
        GraphFamily::InfinitePath => Err(NsError::NotHyperfinite),
    }
}

fn per_index_metric(
    family: &GraphFamily,
    metric: impl Fn(&crate::graph::FiniteGraph) -> usize,
) -> Result<UppSeq, NsError> {
    let (threshold, period) = family.structure();
    let value = |n: u64| -> Result<num_bigint::BigInt, NsError> {
        Ok(num_bigint::BigInt::from(metric(&family.graph_at(n)?)))
    };
    let cycle = (threshold..threshold + period)
        .map(|n| Ok(crate::upalg::Poly::constant(num_rational::BigRational::from_integer(value(n)?))))
        .collect::<Result<Vec<_>, NsError>>()?;
    let prefix = (0..threshold).map(value).collect::<Result<Vec<_>, _>>()?;
    Ok(UppSeq::new(threshold, cycle, prefix)?)
}

pub fn ns_summary(
    family: &GraphFamily,
    filter: &AnchoredUltrafilter,
) -> Result<NsGraphSummary, NsError> {
    if !family.is_hyperfinite() {
        return Err(NsError::NotHyperfiniteConnected);
    }
    let (p_seq, q_seq) = family.size_sequences()?;
    let connected = filter.decide(&family.property_set(Property::Connected)?);
    let two_plus = UppSeq::constant_int(2).relate(&p_seq, Rel::Le)?;
    let some_edge = UppSeq::constant_int(1).relate(&q_seq, Rel::Le)?;
    if !connected || !filter.decide(&two_plus) || !filter.decide(&some_edge) {
        return Err(NsError::NotHyperfiniteConnected);
    }

    let one = Hypernatural::one();
    let p = Hypernatural::new(p_seq.clone())?;
    let q = Hypernatural::new(q_seq.clone())?;
    // r = (q + 1) - p, and along a spanning tree r = q - (p - 1)
    let cyclomatic = q.add(&one).checked_sub(&p, filter)?;
    let tree_edges = p.checked_sub(&one, filter)?;
    let tree_route = q.checked_sub(&tree_edges, filter)?;
    let cyclomatic_consistent = cyclomatic.eq_under(&tree_route, filter);

    let one_seq = UppSeq::constant_int(1);
    let p_minus_1 = p_seq.sub(&one_seq);
    let q_upper = p_seq.mul(&p_minus_1).floor_half()?;
    let size_bounds_hold = filter.decide(&p_minus_1.relate(&q_seq, Rel::Le)?)
        && filter.decide(&q_seq.relate(&q_upper, Rel::Le)?);

    let (r_seq, d_seq) = radius_diameter_seqs(family)?;
    let radius_diameter_hold = filter.decide(&r_seq.relate(&d_seq, Rel::Le)?)
        && filter.decide(&d_seq.relate(&r_seq.mul(&UppSeq::constant_int(2)), Rel::Le)?);

    Ok(NsGraphSummary {
        vertex_count: p,
        edge_count: q,
        cyclomatic,
        radius: Hypernatural::new(r_seq)?,
        diameter: Hypernatural::new(d_seq)?,
        connected,
        eulerian: filter.decide(&family.property_set(Property::Eulerian)?),
        dirac: filter.decide(&family.property_set(Property::Dirac)?),
        ore: filter.decide(&family.property_set(Property::Ore)?),
        posa: filter.decide(&family.property_set(Property::Posa)?),
        cyclomatic_consistent,
        size_bounds_hold,
        radius_diameter_hold,
    })
}

/// Hypernatural degree of a vertex of a hyperfinite family.
pub fn ns_degree(x: &NsVertex, _filter: &AnchoredUltrafilter) -> Result<Hypernatural, NsError> {
    if !x.family.is_hyperfinite() {
        return Err(NsError::NotHyperfinite);
    }
    Ok(Hypernatural::new(x.family.degree_seq(&x.selector)?)?)
}

/// Vertices in the same nodal galaxy: their distance is a limited
/// hypernatural.
pub fn limitedly_distant(
    x: &NsVertex,
    y: &NsVertex,
    filter: &AnchoredUltrafilter,
) -> Result<bool, NsError> {
    Ok(ns_distance(x, y, filter)?.is_limited(filter))
}

/// Decided nonstandard Eulerian property.
pub fn ns_eulerian(family: &GraphFamily, filter: &AnchoredUltrafilter) -> Result<bool, NsError> {
    if !family.is_hyperfinite() {
        return Err(NsError::NotHyperfinite);
    }
    Ok(filter.decide(&family.property_set(Property::Eulerian)?))
}

/// Transfer-consistency probe for the Euler criterion: when the graph is
/// decided Eulerian, every sampled vertex degree must be decided even.
/// (The panel samples the universal degree condition, which cannot be
/// enumerated over all of *X; the decisive criterion stays the exact
/// per-index property set.)
pub fn eulerian_degree_parity_consistent(
    family: &GraphFamily,
    filter: &AnchoredUltrafilter,
    panel: &[NsVertex],
) -> Result<bool, NsError> {
    if !ns_eulerian(family, filter)? {
        return Ok(true);
    }
    for vertex in panel {
        if vertex.family.as_ref() != family {
            return Err(NsError::FamilyMismatch);
        }
        if ns_degree(vertex, filter)?.parity_under(filter) != crate::upalg::Parity::Even {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decided sufficient criterion for the nonstandard graph to be
/// Hamiltonian.
pub fn ns_hamiltonian(
    family: &GraphFamily,
    criterion: HamiltonianCriterion,
    filter: &AnchoredUltrafilter,
) -> Result<bool, NsError> {
    if !family.is_hyperfinite() {
        return Err(NsError::NotHyperfinite);
    }
    let (p_seq, _) = family.size_sequences()?;
    let three_plus = UppSeq::constant_int(3).relate(&p_seq, Rel::Le)?;
    if !filter.decide(&three_plus) {
        return Err(NsError::FewerThanThreeVerticesAE);
    }
    Ok(filter.decide(&family.property_set(criterion.property())?))
}

/// Outcome of the transferred coloring theorem.
#[derive(Clone, Debug)]
pub enum NsColoring {
    /// The maximum degree is a.e. bounded by a standard `k`: a coloring with
    /// the standard palette `{1..k+1}`.
    Strong(StrongColoring),
    /// Unbounded degrees: the palette size is merely a hypernatural.
    Weak(WeakColoring),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum ColorScheme {
    /// Alternate colors 1, 2 by vertex index (paths are bipartite in index
    /// order).
    PathParity,
    /// Ascending-index greedy coloring of the materialized graph.
    Greedy,
}

#[derive(Clone, Debug)]
pub struct StrongColoring {
    family: Rc<GraphFamily>,
    degree_bound: u64,
    scheme: ColorScheme,
}

impl StrongColoring {
    /// The standard degree bound `k`; the palette is `{1..=k+1}`.
    pub fn degree_bound(&self) -> u64 {
        self.degree_bound
    }

    pub fn palette_size(&self) -> u64 {
        self.degree_bound + 1
    }

    /// A concrete valid coloring of `G_n`, 1-based colors.
    pub fn coloring_at(&self, n: u64) -> Result<Vec<usize>, NsError> {
        let graph = self.family.graph_at(n)?;
        Ok(match self.scheme {
            ColorScheme::PathParity => (0..graph.vertex_count()).map(|i| 1 + i % 2).collect(),
            ColorScheme::Greedy => graph.greedy_coloring(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct WeakColoring {
    family: Rc<GraphFamily>,
    palette: Hypernatural,
}

impl WeakColoring {
    /// Hypernatural palette size `*k + 1`.
    pub fn palette(&self) -> &Hypernatural {
        &self.palette
    }

    /// A concrete valid coloring of `G_n`; uses at most `palette(n)` colors.
    pub fn coloring_at(&self, n: u64) -> Result<Vec<usize>, NsError> {
        Ok(self.family.graph_at(n)?.greedy_coloring())
    }
}

/// Transferred coloring theorem: a standard palette when the degree bound
/// is limited, a hypernatural palette otherwise.
pub fn ns_coloring(
    family: &Rc<GraphFamily>,
    filter: &AnchoredUltrafilter,
) -> Result<NsColoring, NsError> {
    if !family.is_hyperfinite() {
        return Err(NsError::NotHyperfinite);
    }
    if matches!(family.as_ref(), GraphFamily::Path(_)) {
        // paths are bipartite in index order; two colors beat the degree bound
        return Ok(NsColoring::Strong(StrongColoring {
            family: family.clone(),
            degree_bound: 1,
            scheme: ColorScheme::PathParity,
        }));
    }
    let max_degree = Hypernatural::new(family.max_degree_seq()?)?;
    match max_degree.identify_standard(filter) {
        Some(k) => Ok(NsColoring::Strong(StrongColoring {
            family: family.clone(),
            degree_bound: k.to_u64().expect("standard degree bounds fit in u64"),
            scheme: ColorScheme::Greedy,
        })),
        None => Ok(NsColoring::Weak(WeakColoring {
            family: family.clone(),
            palette: max_degree.add(&Hypernatural::one()),
        })),
    }
}

/// For constant families, the standard vertex a nonstandard vertex reduces
/// to; `None` exactly when the enlargement is proper (infinite path with an
/// unbounded selector).
pub fn identify_standard_vertex(
    x: &NsVertex,
    filter: &AnchoredUltrafilter,
) -> Result<Option<u64>, NsError> {
    let standard = Hypernatural::new(x.selector.seq().clone())?
        .identify_standard(filter)
        .map(|v| v.to_u64().expect("vertex indices fit in u64"));
    match x.family.as_ref() {
        GraphFamily::Constant(_) => Ok(Some(standard.expect(
            "a valid selector on a finite constant graph is bounded, hence a.e. constant",
        ))),
        GraphFamily::InfinitePath => Ok(standard),
        _ => Err(NsError::NotConstantFamily),
    }
}
