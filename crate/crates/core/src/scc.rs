/// Strongly connected components of a directed graph given as adjacency
/// lists, plus the imprimitivity index of each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    /// Components, each sorted ascending, ordered by their smallest node.
    pub components: Vec<Vec<usize>>,
    /// Component index of each node.
    pub comp_of: Vec<usize>,
}

/// Tarjan's algorithm, iterative to keep recursion depth bounded.
pub fn strongly_connected_components(adj: &[Vec<usize>]) -> SccDecomposition {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut lowlink = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut components: Vec<Vec<usize>> = Vec::new();

    // Explicit DFS frames: (node, next child position).
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for start in 0..n {
        if index[start] != usize::MAX {
            continue;
        }
        frames.push((start, 0));
        index[start] = next_index;
        lowlink[start] = next_index;
        next_index += 1;
        stack.push(start);
        on_stack[start] = true;

        while let Some(&mut (v, ref mut child)) = frames.last_mut() {
            if *child < adj[v].len() {
                let w = adj[v][*child];
                *child += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    lowlink[parent] = lowlink[parent].min(lowlink[v]);
                }
                if lowlink[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("Tarjan stack underflow");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    components.push(comp);
                }
            }
        }
    }

    components.sort_by_key(|c| c[0]);
    let mut comp_of = vec![0usize; n];
    for (ci, comp) in components.iter().enumerate() {
        for &v in comp {
            comp_of[v] = ci;
        }
    }
    SccDecomposition { components, comp_of }
}

/// Imprimitivity index of one strongly connected component: the gcd of all
/// cycle lengths through its nodes, computed as gcd over intra-component
/// edges (u, v) of |level(u) + 1 - level(v)| with BFS levels from any node.
/// Returns 0 for a trivial component with no internal edge (no cycle at all).
pub fn imprimitivity_index(adj: &[Vec<usize>], component: &[usize]) -> usize {
    let in_comp: std::collections::HashSet<usize> = component.iter().copied().collect();
    let root = component[0];
    let mut level: std::collections::HashMap<usize, i64> = std::collections::HashMap::new();
    level.insert(root, 0);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let lu = level[&u];
        for &v in &adj[u] {
            if in_comp.contains(&v) && !level.contains_key(&v) {
                level.insert(v, lu + 1);
                queue.push_back(v);
            }
        }
    }
    let mut h: u64 = 0;
    for &u in component {
        for &v in &adj[u] {
            if in_comp.contains(&v) {
                let d = (level[&u] + 1 - level[&v]).unsigned_abs();
                h = num::integer::gcd(h, d);
            }
        }
    }
    h as usize
}
