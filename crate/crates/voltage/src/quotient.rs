//! Quotient graphs under automorphism actions and the reconstruction of
//! voltage assignments from fixed-free actions.

use crate::error::VoltageError;
use crate::type1::MultiVoltage1;
use crate::type2::MultiVoltage2;
use msg_core::semiarc::GraphAut;
use msg_core::Multigraph;
use msg_groups::{FiniteGroup, MultiGroup};

/// Quotient by a list of automorphisms (closed under composition):
/// vertices become vertex orbits, edges edge orbits, with induced
/// incidence.
pub fn quotient_graph(
    g: &Multigraph,
    action: &[GraphAut],
) -> Result<(Multigraph, Vec<usize>, Vec<usize>), VoltageError> {
    for (i, a) in action.iter().enumerate() {
        if !a.is_valid(g) {
            return Err(VoltageError::BadAction(format!(
                "permutation {i} is not an automorphism"
            )));
        }
    }
    // closure under composition (as vertex/edge permutation pairs)
    let key = |a: &GraphAut| (a.vertex_perm.clone(), a.edge_perm.clone());
    let set: std::collections::HashSet<_> = action.iter().map(key).collect();
    for a in action {
        for b in action {
            let vp: Vec<usize> = (0..g.vertex_count()).map(|v| b.vertex_perm[a.vertex_perm[v]]).collect();
            let ep: Vec<usize> = (0..g.edge_count()).map(|e| b.edge_perm[a.edge_perm[e]]).collect();
            if !set.contains(&(vp, ep)) {
                return Err(VoltageError::BadAction("action not closed under composition".into()));
            }
        }
    }
    // orbits
    let mut vrep: Vec<usize> = (0..g.vertex_count()).collect();
    for a in action {
        for v in 0..g.vertex_count() {
            let img = a.vertex_perm[v];
            let (x, y) = (root(&mut vrep, v), root(&mut vrep, img));
            if x != y {
                vrep[x.max(y)] = x.min(y);
            }
        }
    }
    let mut erep: Vec<usize> = (0..g.edge_count()).collect();
    for a in action {
        for e in 0..g.edge_count() {
            let img = a.edge_perm[e];
            let (x, y) = (root(&mut erep, e), root(&mut erep, img));
            if x != y {
                erep[x.max(y)] = x.min(y);
            }
        }
    }
    let vclass: Vec<usize> = (0..g.vertex_count()).map(|v| root(&mut vrep, v)).collect();
    let eclass: Vec<usize> = (0..g.edge_count()).map(|e| root(&mut erep, e)).collect();
    let mut vids: Vec<usize> = vclass.clone();
    vids.sort_unstable();
    vids.dedup();
    let mut eids: Vec<usize> = eclass.clone();
    eids.sort_unstable();
    eids.dedup();
    let vindex = |r: usize| vids.binary_search(&r).unwrap();
    let mut edges = Vec::new();
    for &er in &eids {
        let (u, v) = g.edge(er);
        edges.push((vindex(vclass[u]), vindex(vclass[v])));
    }
    let q = Multigraph::new(vids.len(), edges).expect("in range");
    Ok((q, vclass.iter().map(|&r| vindex(r)).collect(), eclass))
}

fn root(dsu: &mut Vec<usize>, x: usize) -> usize {
    if dsu[x] != x {
        let r = root(dsu, dsu[x]);
        dsu[x] = r;
    }
    dsu[x]
}

/// A single finite group acting freely: one automorphism per element, in
/// table order.
pub struct FreeAction {
    pub group: FiniteGroup,
    pub auts: Vec<GraphAut>,
}

impl FreeAction {
    /// Validate: each permutation is an automorphism, the assignment is a
    /// homomorphism, and only the identity fixes a vertex or an edge.
    pub fn validate(&self, g: &Multigraph) -> Result<(), VoltageError> {
        if self.auts.len() != self.group.order() {
            return Err(VoltageError::BadAction("one automorphism per element".into()));
        }
        for (i, a) in self.auts.iter().enumerate() {
            if !a.is_valid(g) {
                return Err(VoltageError::BadAction(format!("element {i} is not an automorphism")));
            }
        }
        let e = self.group.identity();
        if self.auts[e].vertex_perm.iter().enumerate().any(|(v, &x)| v != x) {
            return Err(VoltageError::BadAction("identity element must act trivially".into()));
        }
        for x in 0..self.group.order() {
            for y in 0..self.group.order() {
                let xy = self.group.op(x, y);
                // A(x∘y) = A(x) ∘ A(y) acting on the left: A(x)(A(y)(v))
                for v in 0..g.vertex_count() {
                    if self.auts[xy].vertex_perm[v]
                        != self.auts[x].vertex_perm[self.auts[y].vertex_perm[v]]
                    {
                        return Err(VoltageError::BadAction(format!(
                            "not a homomorphism at ({x},{y})"
                        )));
                    }
                }
            }
        }
        for (i, a) in self.auts.iter().enumerate() {
            if i == e {
                continue;
            }
            if let Some(v) = a.vertex_perm.iter().enumerate().find(|(v, &x)| *v == x) {
                return Err(VoltageError::BadAction(format!(
                    "element {i} fixes vertex {}",
                    v.0
                )));
            }
            if let Some(eid) = a.edge_perm.iter().enumerate().find(|(e, &x)| *e == x) {
                return Err(VoltageError::BadAction(format!(
                    "element {i} fixes edge {}",
                    eid.0
                )));
            }
        }
        Ok(())
    }
}

/// Reconstruct a voltage assignment from a free action of a single
/// group: returns the quotient voltage graph and the labelling that
/// identifies the covering graph with the quotient's lifting.
pub struct Reconstruction {
    pub voltage: MultiVoltage1,
    /// `labels[v] = (orbit, group element)` for each covering vertex
    pub labels: Vec<(usize, usize)>,
}

pub fn reconstruct_voltage_from_action(
    g: &Multigraph,
    action: &FreeAction,
) -> Result<Reconstruction, VoltageError> {
    action.validate(g)?;
    let (quotient, vclass, eclass) = quotient_graph(g, &action.auts)?;
    let order = action.group.order();
    // label each orbit: least vertex is the identity
    let mut labels = vec![(usize::MAX, usize::MAX); g.vertex_count()];
    for orbit in 0..quotient.vertex_count() {
        let rep = (0..g.vertex_count())
            .find(|&v| vclass[v] == orbit)
            .expect("orbit nonempty");
        for elt in 0..order {
            let img = action.auts[elt].vertex_perm[rep];
            if labels[img] != (usize::MAX, usize::MAX) {
                return Err(VoltageError::BadAction("orbit smaller than the group".into()));
            }
            labels[img] = (orbit, elt);
        }
    }
    if labels.iter().any(|&(o, _)| o == usize::MAX) {
        return Err(VoltageError::BadAction("orbits do not cover the graph".into()));
    }
    // voltage per quotient edge: the orbit edge whose tail is labeled
    // with the identity; the head's label is the voltage
    let mut quotient_edge_of = vec![usize::MAX; g.edge_count()];
    {
        // map edge orbit representative ids to quotient edge indices
        let mut reps: Vec<usize> = eclass.to_vec();
        reps.sort_unstable();
        reps.dedup();
        for e in 0..g.edge_count() {
            quotient_edge_of[e] = reps.binary_search(&eclass[e]).unwrap();
        }
    }
    let identity = action.group.identity();
    let mut psi = vec![usize::MAX; quotient.edge_count()];
    for e in 0..g.edge_count() {
        let (t, h) = g.edge(e);
        if labels[t].1 == identity {
            let q = quotient_edge_of[e];
            if psi[q] == usize::MAX {
                psi[q] = labels[h].1;
            }
        }
    }
    if psi.iter().any(|&x| x == usize::MAX) {
        return Err(VoltageError::BadAction(
            "some edge orbit has no edge rooted at an identity label".into(),
        ));
    }
    let voltage = MultiVoltage1::new(
        quotient,
        MultiGroup::single(action.group.clone()),
        psi,
    )?;
    Ok(Reconstruction { voltage, labels })
}

impl Reconstruction {
    /// Check that the lifting of the reconstructed voltage graph is the
    /// covering graph, through the labelling bijection.
    pub fn round_trip_matches(&self, g: &Multigraph) -> bool {
        let lift = self.voltage.lift();
        if lift.graph.vertex_count() != g.vertex_count()
            || lift.graph.edge_count() != g.edge_count()
        {
            return false;
        }
        // lifted (orbit, elt) -> covering vertex
        let mut back = vec![usize::MAX; g.vertex_count()];
        for (v, &(orbit, elt)) in self.labels.iter().enumerate() {
            back[lift.vertex_id(orbit, elt)] = v;
        }
        if back.iter().any(|&x| x == usize::MAX) {
            return false;
        }
        msg_core::iso::is_isomorphism(&lift.graph, g, &back)
    }
}

/// Type-2 reconstruction: a per-class action (class `i` of the covering
/// vertices carries a free `Γ_i`-action through the supplied
/// automorphisms restricted to that class).
pub struct PartialAction {
    pub groups: MultiGroup,
    /// class of each covering vertex
    pub class_of: Vec<usize>,
    /// `auts[i][k]`: vertex permutation of the k-th element of
    /// constituent `i`; must fix vertices outside class `i`
    pub vperms: Vec<Vec<Vec<usize>>>,
    /// matching edge permutations
    pub eperms: Vec<Vec<Vec<usize>>>,
}

pub fn reconstruct_type2_from_action(
    g: &Multigraph,
    action: &PartialAction,
) -> Result<(MultiVoltage2, Vec<(usize, usize)>), VoltageError> {
    let nclasses = action.groups.constituent_count();
    if action.class_of.len() != g.vertex_count() {
        return Err(VoltageError::BadPartition("one class per covering vertex".into()));
    }
    // vertex orbits under per-class actions
    let mut vrep: Vec<usize> = (0..g.vertex_count()).collect();
    for i in 0..nclasses {
        for vp in &action.vperms[i] {
            for v in 0..g.vertex_count() {
                let (x, y) = (root(&mut vrep, v), root(&mut vrep, vp[v]));
                if x != y {
                    vrep[x.max(y)] = x.min(y);
                }
            }
        }
    }
    let vclass: Vec<usize> = (0..g.vertex_count()).map(|v| root(&mut vrep, v)).collect();
    let mut vids: Vec<usize> = vclass.clone();
    vids.sort_unstable();
    vids.dedup();
    let vindex = |r: usize| vids.binary_search(&r).unwrap();

    // quotient vertex class = class of any member (classes are unions of
    // orbits by construction)
    let mut qclass = vec![usize::MAX; vids.len()];
    for v in 0..g.vertex_count() {
        let q = vindex(vclass[v]);
        if qclass[q] == usize::MAX {
            qclass[q] = action.class_of[v];
        } else if qclass[q] != action.class_of[v] {
            return Err(VoltageError::BadPartition("orbit crosses classes".into()));
        }
    }

    // label covering vertices: orbit rep gets the class identity;
    // vperms[class][k] acts as the element with table index k
    let mut labels = vec![(usize::MAX, usize::MAX); g.vertex_count()];
    for (q, &rep_root) in vids.iter().enumerate() {
        let class = qclass[q];
        let members = action.groups.constituents()[class].members.clone();
        let rep = (0..g.vertex_count())
            .find(|&v| vclass[v] == rep_root)
            .unwrap();
        for (k, &member) in members.iter().enumerate() {
            let img = action.vperms[class][k][rep];
            if labels[img] != (usize::MAX, usize::MAX) {
                return Err(VoltageError::BadAction("class orbit smaller than its group".into()));
            }
            labels[img] = (q, member);
        }
    }
    if labels.iter().any(|&(o, _)| o == usize::MAX) {
        return Err(VoltageError::BadAction("labels do not cover".into()));
    }

    // edge orbits under all per-class edge permutations
    let mut erep: Vec<usize> = (0..g.edge_count()).collect();
    for i in 0..nclasses {
        for ep in &action.eperms[i] {
            for e in 0..g.edge_count() {
                let (x, y) = (root(&mut erep, e), root(&mut erep, ep[e]));
                if x != y {
                    erep[x.max(y)] = x.min(y);
                }
            }
        }
    }
    let eclass: Vec<usize> = (0..g.edge_count()).map(|e| root(&mut erep, e)).collect();
    let mut eids: Vec<usize> = eclass.clone();
    eids.sort_unstable();
    eids.dedup();

    // quotient edges and voltages
    let mut qedges = Vec::new();
    let mut tau = Vec::new();
    for &er in &eids {
        // pick the orbit edge whose tail label sits in the overlap and is
        // minimal, then read the voltage in the head class's operation
        let candidates: Vec<usize> =
            (0..g.edge_count()).filter(|&e| eclass[e] == er).collect();
        let mut best: Option<(usize, usize)> = None; // (tail label, edge)
        for &e in &candidates {
            let (t, h) = g.edge(e);
            let (qt, a) = labels[t];
            let (qh, _) = labels[h];
            let (i, j) = (qclass[qt], qclass[qh]);
            if action.groups.contains(i, a) && action.groups.contains(j, a) {
                if best.map_or(true, |(la, _)| a < la) {
                    best = Some((a, e));
                }
            }
        }
        let Some((a0, e0)) = best else {
            return Err(VoltageError::BadAction(
                "edge orbit has no tail labeled in the class overlap".into(),
            ));
        };
        let (t, h) = g.edge(e0);
        let (qt, _) = labels[t];
        let (qh, hb) = labels[h];
        let j = qclass[qh];
        let a0_inv = action
            .groups
            .inverse(j, a0)
            .ok_or_else(|| VoltageError::BadVoltage("tail label not invertible in head class".into()))?;
        let b = action
            .groups
            .op(j, a0_inv, hb)
            .ok_or_else(|| VoltageError::BadVoltage("voltage not defined".into()))?;
        qedges.push((qt, qh));
        tau.push(b);
    }
    let quotient = Multigraph::new(vids.len(), qedges).expect("in range");
    let mv = MultiVoltage2::new(quotient, action.groups.clone(), qclass, tau)?;
    Ok((mv, labels))
}

/// Compare a type-2 lifting with a covering graph through labelled
/// vertices.
pub fn type2_round_trip_matches(
    mv: &MultiVoltage2,
    labels: &[(usize, usize)],
    g: &Multigraph,
) -> bool {
    let lift = mv.lift();
    if lift.graph.vertex_count() != g.vertex_count() || lift.graph.edge_count() != g.edge_count()
    {
        return false;
    }
    let mut back = vec![usize::MAX; g.vertex_count()];
    for (v, &(orbit, elt)) in labels.iter().enumerate() {
        let fiber = mv.fiber(orbit);
        let Some(pos) = fiber.iter().position(|&x| x == elt) else {
            return false;
        };
        back[lift.offsets[orbit] + pos] = v;
    }
    if back.iter().any(|&x| x == usize::MAX) {
        return false;
    }
    msg_core::iso::is_isomorphism(&lift.graph, g, &back)
}
