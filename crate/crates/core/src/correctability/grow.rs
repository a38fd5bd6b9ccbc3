use serde::{Deserialize, Serialize};

use super::certificate::{CertBuilder, Certificate, NodeId};
use super::constants::Constants;
use crate::code_geometry::{Embedding, InteractionGraph, Rectangle, EPS};
use crate::error::{Error, Result};
use crate::pauli_algebra::StabilizerCode;

/// Why a certification attempt stopped.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub reason: String,
}

impl Failure {
    pub fn new(reason: impl Into<String>) -> Self {
        Self { reason: reason.into() }
    }
}

pub type Attempt = std::result::Result<Certificate, Failure>;

/// Shared inputs of the certificate builders.
pub struct Context<'a> {
    pub code: &'a StabilizerCode,
    pub emb: &'a Embedding,
    pub graph: InteractionGraph,
    pub ell: f64,
    pub d: usize,
    pub consts: Constants,
}

impl<'a> Context<'a> {
    pub fn new(code: &'a StabilizerCode, emb: &'a Embedding, ell: f64, d: usize, consts: Constants) -> Result<Self> {
        if d == 0 {
            return Err(Error::contract("d must be positive"));
        }
        let graph = InteractionGraph::new(code, emb, ell)?;
        Ok(Self {
            code,
            emb,
            graph,
            ell,
            d,
            consts,
        })
    }
}

/// Certificate for the qubits in `square` by growing concentric squares.
///
/// Requires `ell >= 1` and sides at most `grow_side_factor * d / ell`,
/// rounded up to one unit so desk-scale instances are admissible.
pub fn grow_square(ctx: &Context, square: &Rectangle) -> Result<Attempt> {
    if ctx.ell < 1.0 {
        return Err(Error::contract(format!("growing needs ell >= 1 (ell = {})", ctx.ell)));
    }
    let max_side = (ctx.consts.grow_side_factor * ctx.d as f64 / ctx.ell).max(1.0);
    if square.width().max(square.height()) > max_side + EPS {
        return Err(Error::contract(format!(
            "square side {} exceeds max({} d / ell, 1) = {max_side}",
            square.width().max(square.height()),
            ctx.consts.grow_side_factor
        )));
    }
    let mut b = CertBuilder::new(ctx.d);
    Ok(grow_into(ctx, &mut b, square).map(|id| b.finish(id)))
}

/// The growing procedure without the side-length precondition; every step
/// is still checked, so the result stays sound. Used for rectangles of
/// other shapes as well: each round shrinks both sides by `2 ell`.
pub(crate) fn grow_into(ctx: &Context, b: &mut CertBuilder, rect: &Rectangle) -> std::result::Result<NodeId, Failure> {
    let d = ctx.d;
    let v = rect.qubits(ctx.emb);
    let f = ctx.graph.counter.f(&v);
    if f as f64 > ctx.consts.grow_bad_fraction * d as f64 {
        return Err(Failure::new(format!(
            "hypothesis failed: f(V) = {f} > {} d = {}",
            ctx.consts.grow_bad_fraction,
            ctx.consts.grow_bad_fraction * d as f64
        )));
    }
    if v.len() < d {
        return Ok(b.leaf(v));
    }

    let base = ctx.consts.base_side_factor * (d as f64).sqrt();
    let step = 2.0 * ctx.ell;
    // rects[j] shrinks every side by j * ell; the last one is the base.
    let mut rects = vec![*rect];
    loop {
        let r = *rects.last().unwrap();
        if r.width().max(r.height()) <= base {
            break;
        }
        let c = r.center();
        let (w, h) = ((r.width() - step).max(0.0), (r.height() - step).max(0.0));
        rects.push(Rectangle {
            x_lo: c[0] - w / 2.0,
            x_hi: c[0] + w / 2.0,
            y_lo: c[1] - h / 2.0,
            y_hi: c[1] + h / 2.0,
        });
    }

    let base_set = rects.last().unwrap().qubits(ctx.emb);
    if base_set.len() >= d {
        return Err(Failure::new(format!(
            "base square of side <= {base} holds {} >= d = {d} qubits",
            base_set.len()
        )));
    }
    let mut u_set = base_set.clone();
    let mut u = b.leaf(base_set);
    for round in (0..rects.len() - 1).rev() {
        let outer = rects[round].qubits(ctx.emb);
        let t_set = outer.difference(&u_set).union(&ctx.graph.bad_partners(&u_set));
        if t_set.len() >= d {
            return Err(Failure::new(format!(
                "round {} (side {}): |T| = {} >= d = {d}",
                rects.len() - 1 - round,
                rects[round].width().max(rects[round].height()),
                t_set.len()
            )));
        }
        let t = b.leaf(t_set);
        let e = b.expansion(u, t);
        u = b.subset(outer.clone(), e);
        u_set = outer;
    }
    Ok(u)
}
