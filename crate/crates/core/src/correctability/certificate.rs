use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pauli_algebra::{QubitSet, StabilizerCode};

pub type NodeId = usize;

/// One derivation step. Children always have smaller ids than their parent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Step {
    /// Fewer than `d` qubits.
    DistanceLeaf,
    /// Subset of a correctable set.
    Subset { parent: NodeId },
    /// Disjoint union of pairwise decoupled correctable sets.
    Union {
        children: Vec<NodeId>,
        /// Interactions joining two children; must be empty.
        #[serde(default)]
        cross_interactions: Vec<(usize, usize)>,
    },
    /// `u` correctable, `t` correctable and `t` containing the boundary of `u`.
    Expansion { u: NodeId, t: NodeId },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: NodeId,
    #[serde(flatten)]
    pub step: Step,
    pub qubits: Vec<usize>,
}

impl Node {
    pub fn root(&self) -> QubitSet {
        self.qubits.iter().copied().collect()
    }
}

/// A replayable proof that a qubit set is correctable for a code of
/// distance at least `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub d: usize,
    pub root: NodeId,
    pub nodes: Vec<Node>,
}

impl Certificate {
    pub fn root_set(&self) -> QubitSet {
        self.nodes[self.root].root()
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}

/// Appends nodes in dependency order.
#[derive(Clone, Debug)]
pub struct CertBuilder {
    d: usize,
    nodes: Vec<Node>,
}

impl CertBuilder {
    pub fn new(d: usize) -> Self {
        Self { d, nodes: Vec::new() }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn root_of(&self, id: NodeId) -> QubitSet {
        self.nodes[id].root()
    }

    fn push(&mut self, step: Step, root: QubitSet) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(Node {
            id,
            step,
            qubits: root.into_vec(),
        });
        id
    }

    pub fn leaf(&mut self, set: QubitSet) -> NodeId {
        self.push(Step::DistanceLeaf, set)
    }

    pub fn subset(&mut self, set: QubitSet, parent: NodeId) -> NodeId {
        self.push(Step::Subset { parent }, set)
    }

    pub fn union(&mut self, children: Vec<NodeId>) -> NodeId {
        let root = children
            .iter()
            .fold(QubitSet::new(), |acc, &c| acc.union(&self.root_of(c)));
        self.push(
            Step::Union {
                children,
                cross_interactions: Vec::new(),
            },
            root,
        )
    }

    pub fn expansion(&mut self, u: NodeId, t: NodeId) -> NodeId {
        let root = self.root_of(u).union(&self.root_of(t));
        self.push(Step::Expansion { u, t }, root)
    }

    /// Copies the nodes of `other` (built for the same `d`), returning the
    /// new id of its root.
    pub fn graft(&mut self, other: &Certificate) -> NodeId {
        let offset = self.nodes.len();
        for n in &other.nodes {
            let step = match &n.step {
                Step::DistanceLeaf => Step::DistanceLeaf,
                Step::Subset { parent } => Step::Subset { parent: parent + offset },
                Step::Union {
                    children,
                    cross_interactions,
                } => Step::Union {
                    children: children.iter().map(|c| c + offset).collect(),
                    cross_interactions: cross_interactions.clone(),
                },
                Step::Expansion { u, t } => Step::Expansion {
                    u: u + offset,
                    t: t + offset,
                },
            };
            self.push(step, n.root());
        }
        other.root + offset
    }

    pub fn finish(self, root: NodeId) -> Certificate {
        Certificate {
            d: self.d,
            root,
            nodes: self.nodes,
        }
    }
}

/// Qubits outside `u` sharing a generator support with a qubit of `u`.
pub fn boundary(code: &StabilizerCode, u: &QubitSet) -> QubitSet {
    let n = code.n();
    let bits = u.to_bits(n);
    let mut out = Vec::new();
    for g in code.generators() {
        let support = g.support();
        if support.iter().any(|&q| q < n && bits.get(q)) {
            out.extend(support.into_iter().filter(|&q| !bits.get(q)));
        }
    }
    out.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failing_node: Option<NodeId>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

impl Verification {
    fn ok() -> Self {
        Self {
            valid: true,
            failing_node: None,
            reason: None,
        }
    }

    fn fail(id: NodeId, reason: String) -> Self {
        Self {
            valid: false,
            failing_node: Some(id),
            reason: Some(reason),
        }
    }
}

/// Replays every node. The certificate's `d` is trusted: leaves are sound
/// only if the code's distance is at least `d` (or `k = 0`).
pub fn verify_certificate(code: &StabilizerCode, cert: &Certificate) -> Verification {
    let n = code.n();
    if cert.nodes.is_empty() {
        return Verification::fail(0, "certificate has no nodes".into());
    }
    if cert.root >= cert.nodes.len() {
        return Verification::fail(cert.root, "root id out of range".into());
    }
    let mut roots: Vec<QubitSet> = Vec::with_capacity(cert.nodes.len());
    for (id, node) in cert.nodes.iter().enumerate() {
        if node.id != id {
            return Verification::fail(id, format!("node id {} listed at position {id}", node.id));
        }
        let root = node.root();
        if root.len() != node.qubits.len() || node.qubits.windows(2).any(|w| w[0] >= w[1]) {
            return Verification::fail(id, "qubit list not strictly increasing".into());
        }
        if root.check_bounds(n).is_err() {
            return Verification::fail(id, format!("qubit index out of range for n = {n}"));
        }
        let earlier = |c: NodeId| c < id;
        match &node.step {
            Step::DistanceLeaf => {
                if root.len() >= cert.d {
                    return Verification::fail(id, format!("leaf has {} >= d = {} qubits", root.len(), cert.d));
                }
            }
            Step::Subset { parent } => {
                if !earlier(*parent) {
                    return Verification::fail(id, "subset parent is not an earlier node".into());
                }
                if !root.is_subset(&roots[*parent]) {
                    return Verification::fail(id, format!("not a subset of node {parent}"));
                }
            }
            Step::Union {
                children,
                cross_interactions,
            } => {
                if let Some(&c) = children.iter().find(|&&c| !earlier(c)) {
                    return Verification::fail(id, format!("union child {c} is not an earlier node"));
                }
                if !cross_interactions.is_empty() {
                    return Verification::fail(id, "union lists cross interactions".into());
                }
                let mut owner = vec![usize::MAX; n];
                let mut all = QubitSet::new();
                for (ci, &c) in children.iter().enumerate() {
                    for q in roots[c].iter() {
                        if owner[q] != usize::MAX {
                            return Verification::fail(id, format!("children overlap at qubit {q}"));
                        }
                        owner[q] = ci;
                    }
                    all = all.union(&roots[c]);
                }
                if all != root {
                    return Verification::fail(id, "root differs from union of children".into());
                }
                for (g, gen) in code.generators().iter().enumerate() {
                    let mut seen = usize::MAX;
                    for q in gen.support() {
                        let o = owner[q];
                        if o == usize::MAX {
                            continue;
                        }
                        if seen == usize::MAX {
                            seen = o;
                        } else if seen != o {
                            return Verification::fail(
                                id,
                                format!("generator {g} couples children {seen} and {o}"),
                            );
                        }
                    }
                }
            }
            Step::Expansion { u, t } => {
                if !earlier(*u) || !earlier(*t) {
                    return Verification::fail(id, "expansion operands are not earlier nodes".into());
                }
                let b = boundary(code, &roots[*u]);
                if !b.is_subset(&roots[*t]) {
                    let missing = b.difference(&roots[*t]);
                    return Verification::fail(
                        id,
                        format!("t misses boundary qubits {:?}", missing.members()),
                    );
                }
                if roots[*u].union(&roots[*t]) != root {
                    return Verification::fail(id, "root differs from u union t".into());
                }
            }
        }
        roots.push(root);
    }
    Verification::ok()
}
