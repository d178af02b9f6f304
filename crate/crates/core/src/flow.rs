//! Integral maximum s-t flow (Edmonds-Karp).

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= nodes || sink >= nodes || source == sink {
            return Err(Error::InvalidInstance(format!(
                "source {source} and sink {sink} must be distinct nodes below {nodes}"
            )));
        }
        Ok(FlowNetwork {
            nodes,
            source,
            sink,
            arcs: Vec::new(),
        })
    }

    /// Adds an arc and returns its index.
    pub fn add_arc(&mut self, from: usize, to: usize, capacity: i64) -> Result<usize> {
        if from >= self.nodes || to >= self.nodes {
            return Err(Error::InvalidInstance(format!("arc {from}->{to} leaves the network")));
        }
        if to == self.source || from == self.sink {
            return Err(Error::InvalidInstance(format!(
                "arc {from}->{to} enters the source or leaves the sink"
            )));
        }
        if capacity < 0 {
            return Err(Error::InvalidInstance(format!("arc {from}->{to} has negative capacity")));
        }
        self.arcs.push(Arc { from, to, capacity });
        Ok(self.arcs.len() - 1)
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flow {
    pub value: i64,
    /// Flow on each arc, indexed like [`FlowNetwork::arcs`].
    pub arc_flow: Vec<i64>,
}

/// Maximum flow by shortest augmenting paths.
pub fn max_flow(net: &FlowNetwork) -> Flow {
    // residual graph: arc 2i forward, 2i+1 backward
    let mut head = vec![Vec::new(); net.nodes];
    let mut to = Vec::with_capacity(net.arcs.len() * 2);
    let mut cap = Vec::with_capacity(net.arcs.len() * 2);
    for a in &net.arcs {
        head[a.from].push(to.len());
        to.push(a.to);
        cap.push(a.capacity);
        head[a.to].push(to.len());
        to.push(a.from);
        cap.push(0);
    }
    let mut value = 0;
    loop {
        let mut via = vec![usize::MAX; net.nodes];
        let mut seen = vec![false; net.nodes];
        seen[net.source] = true;
        let mut queue = VecDeque::from([net.source]);
        while let Some(u) = queue.pop_front() {
            if u == net.sink {
                break;
            }
            for &e in &head[u] {
                if cap[e] > 0 && !seen[to[e]] {
                    seen[to[e]] = true;
                    via[to[e]] = e;
                    queue.push_back(to[e]);
                }
            }
        }
        if !seen[net.sink] {
            break;
        }
        let mut push = i64::MAX;
        let mut v = net.sink;
        while v != net.source {
            let e = via[v];
            push = push.min(cap[e]);
            v = to[e ^ 1];
        }
        let mut v = net.sink;
        while v != net.source {
            let e = via[v];
            cap[e] -= push;
            cap[e ^ 1] += push;
            v = to[e ^ 1];
        }
        value += push;
    }
    let arc_flow = (0..net.arcs.len()).map(|i| cap[2 * i + 1]).collect();
    Flow { value, arc_flow }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_arc() {
        let mut net = FlowNetwork::new(2, 0, 1).unwrap();
        net.add_arc(0, 1, 3).unwrap();
        assert_eq!(max_flow(&net).value, 3);
    }

    #[test]
    fn two_unit_paths() {
        let mut net = FlowNetwork::new(4, 0, 3).unwrap();
        for mid in [1, 2] {
            net.add_arc(0, mid, 1).unwrap();
            net.add_arc(mid, 3, 1).unwrap();
        }
        let f = max_flow(&net);
        assert_eq!(f.value, 2);
        assert_eq!(f.arc_flow, vec![1, 1, 1, 1]);
    }

    #[test]
    fn rejects_bad_arcs() {
        let mut net = FlowNetwork::new(3, 0, 2).unwrap();
        assert!(net.add_arc(1, 0, 1).is_err());
        assert!(net.add_arc(2, 1, 1).is_err());
        assert!(net.add_arc(0, 1, -1).is_err());
        assert!(net.add_arc(0, 5, 1).is_err());
        assert!(FlowNetwork::new(3, 1, 1).is_err());
    }

    fn min_cut(net: &FlowNetwork) -> i64 {
        let inner: Vec<usize> = (0..net.nodes()).filter(|&v| v != net.source() && v != net.sink()).collect();
        (0u32..1 << inner.len())
            .map(|mask| {
                let mut side = vec![false; net.nodes()];
                side[net.source()] = true;
                for (b, &v) in inner.iter().enumerate() {
                    side[v] = mask >> b & 1 == 1;
                }
                net.arcs().iter().filter(|a| side[a.from] && !side[a.to]).map(|a| a.capacity).sum()
            })
            .min()
            .unwrap()
    }

    proptest! {
        #[test]
        fn equals_min_cut(
            nodes in 2usize..=12,
            raw in proptest::collection::vec((0usize..12, 0usize..12, 0i64..=5), 0..40),
        ) {
            let mut net = FlowNetwork::new(nodes, 0, nodes - 1).unwrap();
            for (a, b, c) in raw {
                let (a, b) = (a % nodes, b % nodes);
                if a != b {
                    let _ = net.add_arc(a, b, c);
                }
            }
            let f = max_flow(&net);
            prop_assert_eq!(f.value, min_cut(&net));
            // conservation and capacity
            let mut balance = vec![0i64; nodes];
            for (a, &x) in net.arcs().iter().zip(&f.arc_flow) {
                prop_assert!(0 <= x && x <= a.capacity);
                balance[a.from] -= x;
                balance[a.to] += x;
            }
            for v in 1..nodes - 1 {
                prop_assert_eq!(balance[v], 0);
            }
            prop_assert_eq!(balance[nodes - 1], f.value);
        }
    }
}
