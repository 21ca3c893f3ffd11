//! Closed-form bounds for `π(G ∘ H)`, bound certificates, and the sweep
//! that tests the conjectured lower bound `π(H) + (π(G) - 1)|V(H)|` on
//! small instances.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colouring::{exact_pi, multipartite_exact_pi, ColourError, ColouringRecord};
use crate::graphs::io::to_graph6;
use crate::graphs::{
    independence_number, lex_product, Family, Graph, GraphError, MultipartiteSpec,
};

/// Largest graph the exact solver accepts without an explicit override.
pub const SOLVER_MAX_ORDER: usize = 12;
/// Largest graph [`pi_check`] accepts.
pub const PI_CHECK_MAX_ORDER: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("proven bound violated: {0}")]
    BoundViolated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Colour(#[from] ColourError),
}

/// `π(H) + (|V(G)| - α(G))|V(H)|`, an upper bound on `π(G ∘ H)`.
pub fn upper_bound_product(
    pi_h: usize,
    n_g: usize,
    alpha_g: usize,
    n_h: usize,
) -> Result<usize, BoundsError> {
    if pi_h == 0 || n_g == 0 || alpha_g == 0 || n_h == 0 {
        return Err(BoundsError::BadParameter(
            "all arguments must be positive".into(),
        ));
    }
    if alpha_g > n_g {
        return Err(BoundsError::BadParameter(format!(
            "α(G) = {alpha_g} exceeds |V(G)| = {n_g}"
        )));
    }
    if pi_h > n_h {
        return Err(BoundsError::BadParameter(format!(
            "π(H) = {pi_h} exceeds |V(H)| = {n_h}"
        )));
    }
    Ok(pi_h + (n_g - alpha_g) * n_h)
}

/// `π(H) + (π(G) - 1)|V(H)|`, the conjectured lower bound on `π(G ∘ H)`.
pub fn lower_bound_conjecture(pi_h: usize, pi_g: usize, n_h: usize) -> Result<usize, BoundsError> {
    if pi_h == 0 || pi_g == 0 || n_h == 0 {
        return Err(BoundsError::BadParameter(
            "all arguments must be positive".into(),
        ));
    }
    Ok(pi_h + (pi_g - 1) * n_h)
}

/// Exact `π(G ∘ H)` for complete multipartite `G`, where the upper and
/// lower bounds meet.
pub fn multipartite_product_pi(
    spec: &MultipartiteSpec,
    pi_h: usize,
    n_h: usize,
) -> Result<usize, BoundsError> {
    if pi_h > n_h {
        return Err(BoundsError::BadParameter(format!(
            "π(H) = {pi_h} exceeds |V(H)| = {n_h}"
        )));
    }
    lower_bound_conjecture(pi_h, multipartite_exact_pi(spec), n_h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormSource {
    /// `G` complete multipartite: `π(H) + (π(G) - 1)|V(H)|` is exact.
    CompleteMultipartiteFactor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub value: usize,
    pub source: ClosedFormSource,
}

/// Bounds on `π(G ∘ H)` for one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsCertificate {
    pub g: String,
    pub h: String,
    pub g6_g: String,
    pub g6_h: String,
    pub order_g: usize,
    pub order_h: usize,
    pub alpha_g: usize,
    pub pi_g: usize,
    pub pi_h: usize,
    pub lower_conjectured: usize,
    pub upper_product: usize,
    pub exact: Option<usize>,
    pub witness: Option<ColouringRecord>,
    pub closed_form: Option<ClosedForm>,
}

impl BoundsCertificate {
    /// `None` until the exact value is known.
    pub fn conjecture_holds(&self) -> Option<bool> {
        self.exact.map(|e| e >= self.lower_conjectured)
    }
}

/// Guard on the solver's input size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverLimits {
    pub max_order: usize,
    pub force: bool,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            max_order: SOLVER_MAX_ORDER,
            force: false,
        }
    }
}

impl SolverLimits {
    pub fn forced() -> Self {
        SolverLimits {
            force: true,
            ..Self::default()
        }
    }

    pub fn check(&self, what: &str, n: usize) -> Result<(), BoundsError> {
        if n > self.max_order && !self.force {
            return Err(BoundsError::TooLarge(format!(
                "{what} has {n} vertices; the solver limit is {} (override with force)",
                self.max_order
            )));
        }
        Ok(())
    }
}

/// A graph with the descriptor it came from.
#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub family: Option<Family>,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn from_family(family: Family) -> Result<Self, BoundsError> {
        Ok(NamedGraph {
            name: family.to_string(),
            graph: family.build()?,
            family: Some(family),
        })
    }

    pub fn parse(desc: &str) -> Result<Self, BoundsError> {
        Self::from_family(desc.parse()?)
    }

    /// The part sizes if the graph is complete multipartite.
    pub fn multipartite_spec(&self) -> Option<MultipartiteSpec> {
        if let Some(spec) = self.family.as_ref().and_then(Family::multipartite_spec) {
            return Some(spec);
        }
        let parts = self.graph.multipartite_parts()?;
        MultipartiteSpec::new(parts.iter().map(Vec::len).collect()).ok()
    }
}

/// Assembles the certificate for `G ∘ H`; with `exact`, also solves the
/// product and checks it against the upper bound and any closed form.
pub fn certify(
    g: &NamedGraph,
    h: &NamedGraph,
    exact: bool,
    limits: SolverLimits,
) -> Result<BoundsCertificate, BoundsError> {
    let pi_g = factor_pi(g, limits)?;
    let pi_h = factor_pi(h, limits)?;
    certify_with(g, h, pi_g, pi_h, exact, limits)
}

/// Solver value for a factor; complete multipartite factors beyond the
/// solver limit fall back to the closed form.
fn factor_pi(g: &NamedGraph, limits: SolverLimits) -> Result<usize, BoundsError> {
    match limits.check(&format!("factor {}", g.name), g.graph.n()) {
        Ok(()) => Ok(exact_pi(&g.graph, None, None)?.pi),
        Err(e) => g
            .multipartite_spec()
            .map(|s| multipartite_exact_pi(&s))
            .ok_or(e),
    }
}

fn certify_with(
    g: &NamedGraph,
    h: &NamedGraph,
    pi_g: usize,
    pi_h: usize,
    exact: bool,
    limits: SolverLimits,
) -> Result<BoundsCertificate, BoundsError> {
    let (n_g, n_h) = (g.graph.n(), h.graph.n());
    let alpha_g = independence_number(&g.graph).0;
    let lower = lower_bound_conjecture(pi_h, pi_g, n_h)?;
    let upper = upper_bound_product(pi_h, n_g, alpha_g, n_h)?;
    let closed_form = g
        .multipartite_spec()
        .map(|spec| multipartite_product_pi(&spec, pi_h, n_h))
        .transpose()?
        .map(|value| ClosedForm {
            value,
            source: ClosedFormSource::CompleteMultipartiteFactor,
        });

    let mut cert = BoundsCertificate {
        g: g.name.clone(),
        h: h.name.clone(),
        g6_g: to_graph6(&g.graph),
        g6_h: to_graph6(&h.graph),
        order_g: n_g,
        order_h: n_h,
        alpha_g,
        pi_g,
        pi_h,
        lower_conjectured: lower,
        upper_product: upper,
        exact: None,
        witness: None,
        closed_form,
    };
    if exact {
        let product = lex_product(&g.graph, &h.graph)?;
        limits.check("product", product.graph().n())?;
        // G and H are both induced subgraphs of G ∘ H.
        let res = exact_pi(product.graph(), Some(pi_g.max(pi_h)), Some(upper))?;
        if res.pi > upper {
            return Err(BoundsError::BoundViolated(format!(
                "π({} ∘ {}) = {} exceeds the product upper bound {upper}",
                g.name, h.name, res.pi
            )));
        }
        if let Some(cf) = closed_form {
            if cf.value != res.pi {
                return Err(BoundsError::BoundViolated(format!(
                    "π({} ∘ {}) = {} differs from the multipartite closed form {}",
                    g.name, h.name, res.pi, cf.value
                )));
            }
        }
        cert.exact = Some(res.pi);
        cert.witness = Some(ColouringRecord::new(product.graph(), &res.witness));
    }
    Ok(cert)
}

/// Outcome of comparing `π(G)` with `n - α(G) + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiCheck {
    pub pi_exact: usize,
    pub upper_n_minus_alpha_plus_1: usize,
    pub is_multipartite: bool,
    pub equality_expected: bool,
    pub equality_observed: bool,
}

/// Computes `π(G)` and `n - α(G) + 1`; errors if the bound fails, or if `G`
/// is complete multipartite and the two differ.
pub fn pi_check(g: &Graph) -> Result<PiCheck, BoundsError> {
    let n = g.n();
    if n > PI_CHECK_MAX_ORDER {
        return Err(BoundsError::TooLarge(format!(
            "check is limited to {PI_CHECK_MAX_ORDER} vertices, got {n}"
        )));
    }
    let pi = exact_pi(g, None, None)?.pi;
    let upper = n - independence_number(g).0 + 1;
    let is_multipartite = g.multipartite_parts().is_some();
    let check = PiCheck {
        pi_exact: pi,
        upper_n_minus_alpha_plus_1: upper,
        is_multipartite,
        equality_expected: is_multipartite,
        equality_observed: pi == upper,
    };
    if pi > upper || (is_multipartite && pi != upper) {
        return Err(BoundsError::BoundViolated(format!("{check:?}")));
    }
    Ok(check)
}

/// The named families used by the sweep, every member of order at most
/// `max_order`: `K_n, E_n, P_n, C_n, S_n`, complete bipartite `K_{m,n}` with
/// `2 <= m <= n`, and complete multipartite graphs with at least three parts,
/// not all of size one. Descriptors naming the same labelled graph are kept
/// once.
pub fn default_pool(max_order: usize) -> Vec<Family> {
    let mut pool = Vec::new();
    for n in 1..=max_order {
        pool.push(Family::Complete(n));
    }
    for n in 2..=max_order {
        pool.push(Family::Empty(n));
    }
    for n in 3..=max_order {
        pool.push(Family::Path(n));
    }
    for n in 4..=max_order {
        pool.push(Family::Cycle(n));
    }
    for n in 2..max_order {
        pool.push(Family::Star(n));
    }
    let mut partitions = Vec::new();
    collect_partitions(max_order, max_order, &mut Vec::new(), &mut partitions);
    partitions.sort_by_key(|p| (p.iter().sum::<usize>(), p.len()));
    for parts in partitions {
        let bipartite_ok = parts.len() == 2 && parts[0] >= 2;
        let multi_ok = parts.len() >= 3 && parts.iter().any(|&p| p > 1);
        if bipartite_ok || multi_ok {
            pool.push(Family::Multipartite(
                MultipartiteSpec::new(parts).expect("nonempty parts"),
            ));
        }
    }
    pool
}

/// Partitions of every total up to `max_total`, parts in increasing order.
fn collect_partitions(
    max_total: usize,
    max_part: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if !prefix.is_empty() {
        out.push(prefix.clone());
    }
    let lo = prefix.last().copied().unwrap_or(1);
    let used: usize = prefix.iter().sum();
    for p in lo..=max_part {
        if used + p > max_total {
            break;
        }
        prefix.push(p);
        collect_partitions(max_total, max_part, prefix, out);
        prefix.pop();
    }
}

/// Largest product order a sweep accepts without an explicit override.
pub const SWEEP_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepInstance {
    pub certificate: BoundsCertificate,
    pub conjecture_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub max_product_order: usize,
    /// Sorted by `(graph6(G), graph6(H))`.
    pub instances: Vec<SweepInstance>,
    pub counterexamples: usize,
}

impl SweepReport {
    pub fn counterexample_instances(&self) -> impl Iterator<Item = &SweepInstance> {
        self.instances.iter().filter(|i| !i.conjecture_holds)
    }

    /// Columns `g6_G,g6_H,piG,piH,lower,upper,exact,holds`. graph6 strings
    /// containing CSV metacharacters are quoted.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("g6_G,g6_H,piG,piH,lower,upper,exact,holds\n");
        for inst in &self.instances {
            let c = &inst.certificate;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                csv_field(&c.g6_g),
                csv_field(&c.g6_h),
                c.pi_g,
                c.pi_h,
                c.lower_conjectured,
                c.upper_product,
                c.exact.map_or(String::new(), |e| e.to_string()),
                inst.conjecture_holds
            )
            .unwrap();
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub max_product_order: usize,
    pub pool_g: Vec<Family>,
    pub pool_h: Vec<Family>,
    pub force: bool,
}

impl SweepConfig {
    /// Both factors drawn from [`default_pool`].
    pub fn with_default_pool(max_product_order: usize) -> Self {
        let pool = default_pool(max_product_order);
        SweepConfig {
            max_product_order,
            pool_g: pool.clone(),
            pool_h: pool,
            force: false,
        }
    }
}

/// Solves every pair `(G, H)` from the pools with `|V(G)||V(H)|` at most the
/// configured order and compares `π(G ∘ H)` with the conjectured lower
/// bound. Instances already present in `previous` (same graph6 key, with an
/// exact value) are reused. A violated lower bound is reported, not an
/// error; a violated upper bound is an error.
pub fn sweep_conjecture(
    config: &SweepConfig,
    previous: Option<&SweepReport>,
) -> Result<SweepReport, BoundsError> {
    let max = config.max_product_order;
    if max > SWEEP_MAX_ORDER && !config.force {
        return Err(BoundsError::TooLarge(format!(
            "sweep order {max} exceeds {SWEEP_MAX_ORDER} (override with force)"
        )));
    }
    let build = |pool: &[Family]| -> Result<Vec<NamedGraph>, BoundsError> {
        pool.iter()
            .filter_map(|f| match NamedGraph::from_family(f.clone()) {
                Ok(ng) if ng.graph.n() >= 1 && ng.graph.n() <= max => Some(Ok(ng)),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            })
            .collect()
    };
    let gs = build(&config.pool_g)?;
    let hs = build(&config.pool_h)?;

    // Distinct instances by graph6 key; the first descriptor in pool order names it.
    let mut jobs: BTreeMap<(String, String), (&NamedGraph, &NamedGraph)> = BTreeMap::new();
    for g in &gs {
        for h in &hs {
            if g.graph.n() * h.graph.n() <= max {
                jobs.entry((to_graph6(&g.graph), to_graph6(&h.graph)))
                    .or_insert((g, h));
            }
        }
    }

    let reused: HashMap<(String, String), SweepInstance> = previous
        .map(|p| {
            p.instances
                .iter()
                .filter(|i| i.certificate.exact.is_some())
                .map(|i| {
                    (
                        (i.certificate.g6_g.clone(), i.certificate.g6_h.clone()),
                        i.clone(),
                    )
                })
                .collect()
        })
        .unwrap_or_default();

    // Factor values, each graph solved once.
    let mut factors: BTreeMap<String, &NamedGraph> = BTreeMap::new();
    for ((kg, kh), (g, h)) in &jobs {
        if reused.contains_key(&(kg.clone(), kh.clone())) {
            continue;
        }
        factors.entry(kg.clone()).or_insert(g);
        factors.entry(kh.clone()).or_insert(h);
    }
    let limits = SolverLimits {
        max_order: max.max(SOLVER_MAX_ORDER),
        force: config.force,
    };
    let pis: HashMap<String, usize> = factors
        .into_par_iter()
        .map(|(key, ng)| factor_pi(ng, limits).map(|pi| (key, pi)))
        .collect::<Result<_, _>>()?;

    let jobs: Vec<_> = jobs.into_iter().collect();
    let instances = jobs
        .into_par_iter()
        .map(|(key, (g, h))| {
            if let Some(prev) = reused.get(&key) {
                return Ok(prev.clone());
            }
            let certificate = certify_with(g, h, pis[&key.0], pis[&key.1], true, limits)?;
            let conjecture_holds = certificate.conjecture_holds().expect("exact requested");
            Ok(SweepInstance {
                certificate,
                conjecture_holds,
            })
        })
        .collect::<Result<Vec<_>, BoundsError>>()?;

    let counterexamples = instances.iter().filter(|i| !i.conjecture_holds).count();
    Ok(SweepReport {
        max_product_order: max,
        instances,
        counterexamples,
    })
}
