use super::certificate::{CertBuilder, NodeId};
use super::grow::{Attempt, Context, Failure};
use crate::code_geometry::{find_separator, Rectangle, Side};
use crate::error::Result;
use crate::pauli_algebra::QubitSet;

/// Certificate for the qubits in `region` by recursive separation.
///
/// When `ell < 1` every interaction counts as long: the qubits touching an
/// interaction form one leaf, every other qubit its own leaf, and the
/// leaves are joined by a union. Otherwise a region with fewer than `d`
/// qubits is a leaf; a larger one is split by a separator, both sides are
/// certified recursively, stripped of bad qubits and joined, and the join
/// is expanded by the separator strip, the stripped qubits and the good
/// boundary of the region.
pub fn certify_recursive(ctx: &Context, region: &Rectangle) -> Result<Attempt> {
    let v = region.qubits(ctx.emb);
    let mut b = CertBuilder::new(ctx.d);
    let out = if ctx.ell < 1.0 {
        corner_case(ctx, &mut b, &v)
    } else {
        recurse(ctx, &mut b, &v)
    };
    Ok(out.map(|id| b.finish(id)))
}

fn corner_case(ctx: &Context, b: &mut CertBuilder, v: &QubitSet) -> std::result::Result<NodeId, Failure> {
    let touched: QubitSet = v.iter().filter(|&q| !ctx.graph.neighbors[q].is_empty()).collect();
    if touched.len() >= ctx.d {
        return Err(Failure::new(format!(
            "ell < 1: {} qubits touch an interaction, not below d = {}",
            touched.len(),
            ctx.d
        )));
    }
    if ctx.d <= 1 && touched.len() < v.len() {
        return Err(Failure::new("ell < 1: single qubits need d > 1"));
    }
    let mut children = Vec::new();
    if !touched.is_empty() {
        children.push(b.leaf(touched.clone()));
    }
    for q in v.difference(&touched).iter() {
        children.push(b.leaf(QubitSet::from(vec![q])));
    }
    Ok(b.union(children))
}

fn recurse(ctx: &Context, b: &mut CertBuilder, v: &QubitSet) -> std::result::Result<NodeId, Failure> {
    let d = ctx.d;
    let n = ctx.code.n();
    if v.len() < d {
        return Ok(b.leaf(v.clone()));
    }
    let f = ctx.graph.counter.f(v);
    let f_cap = ctx.consts.recursive_bad_fraction * d as f64;
    if f as f64 > f_cap {
        return Err(Failure::new(format!(
            "hypothesis failed on {} qubits: f(V) = {f} > {f_cap}",
            v.len()
        )));
    }
    let boundary = ctx.graph.good_boundary(ctx.emb, v);
    let budget = ctx.consts.boundary_budget(ctx.ell, n, v.len());
    if boundary.len() as f64 > budget {
        return Err(Failure::new(format!(
            "boundary budget exceeded on {} qubits: {} good boundary qubits > {budget}",
            v.len(),
            boundary.len()
        )));
    }

    let points: Vec<_> = v.iter().map(|q| ctx.emb.point(q)).collect();
    let sep = find_separator(&points, ctx.ell).map_err(|e| Failure::new(format!("separator: {e}")))?;
    let mut sides = [Vec::new(), Vec::new()];
    for (q, p) in v.iter().zip(&points) {
        match sep.side(*p) {
            Side::First => sides[0].push(q),
            Side::Second => sides[1].push(q),
            Side::Middle => {}
        }
    }

    let mut kept = Vec::new();
    let mut kept_set = QubitSet::new();
    for side in sides {
        let side: QubitSet = side.into();
        if side.is_empty() {
            continue;
        }
        let node = recurse(ctx, b, &side)?;
        let good: QubitSet = side.iter().filter(|&q| !ctx.graph.counter.is_bad_qubit(q)).collect();
        kept_set = kept_set.union(&good);
        kept.push(b.subset(good, node));
    }
    let joined = b.union(kept);

    let t_set = boundary.union(&v.difference(&kept_set));
    if t_set.len() >= d {
        return Err(Failure::new(format!(
            "|T| = {} >= d = {d} on {} qubits (bound {})",
            t_set.len(),
            v.len(),
            ctx.consts.recursive_t_bound(ctx.ell, n, d)
        )));
    }
    let t = b.leaf(t_set);
    let e = b.expansion(joined, t);
    Ok(b.subset(v.clone(), e))
}
