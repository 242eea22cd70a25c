//! The compact adjacency list format `{a, b, c, ...}`: for each vertex in
//! turn, the neighbours with a larger label that were not listed before.

use girthgen_core::CubicGraph;

use crate::error::{Error, Result};

fn parse_error(vertex: usize, message: impl Into<String>) -> Error {
    Error::Appendix {
        vertex,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<CubicGraph> {
    let t = text.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| parse_error(0, "list must be enclosed in braces"))?;
    let mut values = Vec::new();
    for tok in inner.split(',') {
        let v: usize = tok
            .trim()
            .parse()
            .map_err(|_| parse_error(0, format!("{:?} is not a vertex label", tok.trim())))?;
        values.push(v);
    }
    let n = values.iter().max().map_or(0, |&m| m + 1);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut it = values.into_iter();
    for v in 0..n {
        let need = 3usize
            .checked_sub(adj[v].len())
            .ok_or_else(|| parse_error(v, "more than three neighbours"))?;
        for _ in 0..need {
            let w = it
                .next()
                .ok_or_else(|| parse_error(v, "list ends before the vertex has degree 3"))?;
            if w <= v {
                return Err(parse_error(
                    v,
                    format!("neighbour {w} is not larger than {v}"),
                ));
            }
            if adj[v].contains(&w) {
                return Err(parse_error(v, format!("neighbour {w} listed twice")));
            }
            adj[v].push(w);
            adj[w].push(v);
        }
    }
    if it.next().is_some() {
        return Err(parse_error(n, "integers left over after the last vertex"));
    }
    let mut rows = Vec::with_capacity(n);
    for (v, nb) in adj.iter().enumerate() {
        if nb.len() != 3 {
            return Err(parse_error(v, format!("degree {}", nb.len())));
        }
        rows.push([nb[0], nb[1], nb[2]]);
    }
    Ok(CubicGraph::from_adjacency(&rows)?)
}

/// Inverse of [`parse`]; the new neighbours of each vertex are listed in
/// increasing order.
pub fn emit(g: &CubicGraph) -> String {
    let mut parts = Vec::with_capacity(g.order() * 3 / 2);
    for v in 0..g.order() {
        let mut later: Vec<usize> = g.neighbours(v).into_iter().filter(|&w| w > v).collect();
        later.sort_unstable();
        parts.extend(later.into_iter().map(|w| w.to_string()));
    }
    format!("{{{}}}", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use girthgen_core::named::*;

    #[test]
    fn round_trip() {
        let p = petersen();
        assert_eq!(parse(&emit(&p)).unwrap().edges(), p.edges());
        assert_eq!(emit(&k4()), "{1, 2, 3, 2, 3, 3}");
    }

    #[test]
    fn errors_name_the_vertex() {
        assert!(matches!(
            parse("{1, 2, 3, 2, 3}"),
            Err(Error::Appendix { vertex: 2, .. })
        ));
        assert!(matches!(
            parse("{1, 2, 3, 0, 3, 3}"),
            Err(Error::Appendix { vertex: 1, .. })
        ));
        assert!(matches!(
            parse("{1, 2, 3, 2, 3, 3, 3}"),
            Err(Error::Appendix { .. })
        ));
        assert!(parse("1, 2").is_err());
    }
}
