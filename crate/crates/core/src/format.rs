//! Text formats: graph6, a plain edge list, and Graphviz DOT.

use crate::bits;
use crate::error::FormatError;
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

/// Encodes `g` as graph6 (upper triangle, column by column, six bits per byte).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(2 + n * n / 12);
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string; an optional `>>graph6<<` header is accepted.
pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(FormatError::Graph6("empty input".into()));
    };
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6(format!("byte outside 63..=126 in `{s}`")));
    }
    if first == 126 {
        return Err(FormatError::Graph6(format!("orders above 62 are not supported (max {MAX_ORDER})")));
    }
    let n = (first - 63) as usize;
    if n == 0 || n > MAX_ORDER {
        return Err(FormatError::Graph6(format!("order {n} outside 1..={MAX_ORDER}")));
    }
    let pairs = n * (n - 1) / 2;
    let need = pairs.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != need {
        return Err(FormatError::Graph6(format!(
            "expected {need} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut rows = vec![0u32; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= bits::bit(j);
                rows[j] |= bits::bit(i);
            }
            k += 1;
        }
    }
    if !pairs.is_multiple_of(6) {
        let pad = 6 - pairs % 6;
        if (body[need - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(FormatError::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_adjacency(&rows)?)
}

/// Writes `n m` followed by one `u v` line per edge, 1-based labels.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        s.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    s
}

/// Reads the edge-list format. Blank lines and `#` comments are skipped.
pub fn from_edge_list(s: &str) -> Result<Graph, FormatError> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) =
        lines.next().ok_or(FormatError::EdgeList { line: 0, msg: "empty input".into() })?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        edges.push(parse_pair(line, text)?);
    }
    if edges.len() != m {
        return Err(FormatError::EdgeList {
            line: hline,
            msg: format!("header promises {m} edges, found {}", edges.len()),
        });
    }
    let g = Graph::build(n, edges)?;
    if g.size() != m {
        return Err(FormatError::EdgeList { line: hline, msg: "duplicate edges".into() });
    }
    Ok(g)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), FormatError> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(FormatError::EdgeList { line, msg: format!("expected two integers, got `{text}`") }),
    }
}

/// Reads either format: a single token is graph6, anything else an edge list.
pub fn parse_any(s: &str) -> Result<Graph, FormatError> {
    let trimmed = s.trim();
    if trimmed.starts_with(HEADER) || !trimmed.contains(char::is_whitespace) {
        from_graph6(trimmed)
    } else {
        from_edge_list(trimmed)
    }
}

/// Graphviz DOT using the graph's vertex labels.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let id: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    let mut s = format!("graph {} {{\n", if id.is_empty() { "G".into() } else { id });
    for v in 0..g.order() {
        s.push_str(&format!("  {};\n", g.label(v)));
    }
    for (a, b) in g.labeled_edges() {
        s.push_str(&format!("  {a} -- {b};\n"));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        let k4 = Graph::build(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        let p3 = Graph::build(3, [(1, 2), (2, 3)]).unwrap();
        // Bits for (0,1),(0,2),(1,2) = 1,0,1 -> 101000 = 40.
        assert_eq!(to_graph6(&p3), "Bg");
        assert_eq!(to_graph6(&Graph::build(1, []).unwrap()), "@");
        assert_eq!(from_graph6(">>graph6<<C~").unwrap(), k4);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("?").is_err());
        assert!(from_graph6("Bh").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::build(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3)]).unwrap();
        let text = to_edge_list(&g);
        assert!(text.starts_with("5 6\n"));
        assert_eq!(from_edge_list(&text).unwrap(), g);
        assert_eq!(parse_any(&text).unwrap(), g);
        assert_eq!(parse_any(&to_graph6(&g)).unwrap(), g);
        assert!(from_edge_list("3 2\n1 2\n").is_err());
        assert!(from_edge_list("3 1\n1 x\n").is_err());
    }

    #[test]
    fn dot_lists_edges() {
        let g = Graph::build(3, [(1, 2), (2, 3)]).unwrap();
        let d = to_dot(&g, "p3");
        assert!(d.contains("1 -- 2;") && d.contains("2 -- 3;"));
    }
}
