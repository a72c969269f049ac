//! The graph-spec language:
//!
//! ```text
//! expr    := term ('+' term)*
//! term    := [k '*'] atom
//! atom    := family | literal
//! family  := ('K'|'E'|'S'|'P'|'C'|'W') integer
//! literal := "edges:" n ":" edge (',' edge)*
//! edge    := i '-' j
//! ```
//!
//! Whitespace is ignored everywhere. `+` is a left-to-right disjoint union and
//! `k*X` repeats `X` k times.

use alloc::format;
use alloc::vec::Vec;

use super::{disjoint_union, make_family, repeat_union, Family, Graph};
use crate::{Error, Result};

struct Cursor {
    // (original byte offset, char) with whitespace removed
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Self {
            chars,
            pos: 0,
            end: text.len(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => Error::parse(self.offset(), format!("expected {wanted}, found '{c}'")),
            None => Error::parse(self.offset(), format!("expected {wanted}, found end of input")),
        }
    }

    fn integer(&mut self) -> Result<usize> {
        let start = self.offset();
        let mut value: usize = 0;
        let mut digits = 0;
        while let Some(c) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize))
                .ok_or_else(|| Error::parse(start, "integer too large"))?;
            digits += 1;
            self.pos += 1;
        }
        if digits == 0 {
            return Err(self.unexpected("an integer"));
        }
        Ok(value)
    }

    fn keyword(&mut self, word: &str) -> bool {
        let save = self.pos;
        for w in word.chars() {
            if !self.eat(w) {
                self.pos = save;
                return false;
            }
        }
        true
    }
}

pub fn parse_graph_spec(text: &str) -> Result<Graph> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(Error::parse(0, "empty graph spec"));
    }
    let mut g = term(&mut cur)?;
    while cur.eat('+') {
        let at = cur.offset();
        let rhs = term(&mut cur)?;
        g = disjoint_union(&g, &rhs).map_err(|e| relocate(e, at))?;
    }
    if cur.peek().is_some() {
        return Err(cur.unexpected("'+' or end of input"));
    }
    Ok(g)
}

fn relocate(e: Error, at: usize) -> Error {
    match e {
        Error::InvalidArgument(m) => Error::parse(at, m),
        other => other,
    }
}

fn term(cur: &mut Cursor) -> Result<Graph> {
    let at = cur.offset();
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        let k = cur.integer()?;
        cur.expect('*')?;
        let g = atom(cur)?;
        return repeat_union(k, &g).map_err(|e| relocate(e, at));
    }
    atom(cur)
}

fn atom(cur: &mut Cursor) -> Result<Graph> {
    let at = cur.offset();
    if cur.keyword("edges:") {
        return literal(cur, at);
    }
    let c = cur.bump().ok_or_else(|| cur.unexpected("a graph family"))?;
    let family = Family::from_letter(c)
        .ok_or_else(|| Error::parse(at, format!("unknown graph family '{c}'")))?;
    let n = cur.integer()?;
    make_family(family, n).map_err(|e| relocate(e, at))
}

fn literal(cur: &mut Cursor, at: usize) -> Result<Graph> {
    let n = cur.integer()?;
    cur.expect(':')?;
    let mut edges = Vec::new();
    loop {
        let eat = cur.offset();
        let i = cur.integer()?;
        cur.expect('-')?;
        let j = cur.integer()?;
        if i >= n || j >= n {
            return Err(Error::parse(eat, format!("edge {i}-{j} outside 0..{n}")));
        }
        edges.push((i, j));
        if !cur.eat(',') {
            break;
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| relocate(e, at))
}

/// Edge-list text: first non-comment line holds `n`, then one `i j` pair per
/// line. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let here = offset;
        offset += line.len();
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(here, format!("expected a non-negative integer, found '{s}'")))
        };
        match order {
            None => {
                if fields.len() != 1 {
                    return Err(Error::parse(here, "first line must hold the vertex count"));
                }
                order = Some(num(fields[0])?);
            }
            Some(_) => {
                if fields.len() != 2 {
                    return Err(Error::parse(here, "edge lines must hold two vertex indices"));
                }
                edges.push((num(fields[0])?, num(fields[1])?));
            }
        }
    }
    let n = order.ok_or_else(|| Error::parse(0, "missing vertex count"))?;
    Graph::from_edges(n, &edges).map_err(|e| relocate(e, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family::*;

    #[test]
    fn spec_examples() {
        let g = parse_graph_spec("S2+2*P2").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edges(), [(0, 1), (2, 3), (4, 5)]);

        assert_eq!(parse_graph_spec("K5").unwrap(), make_family(Complete, 5).unwrap());

        let g = parse_graph_spec("edges:5:0-4").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges(), [(0, 4)]);
    }

    #[test]
    fn whitespace_and_precedence() {
        let a = parse_graph_spec(" K 3 + 2 * P 2 + E1 ").unwrap();
        assert_eq!(a.order(), 8);
        assert_eq!(a.edges(), [(0, 1), (0, 2), (1, 2), (3, 4), (5, 6)]);
        let b = parse_graph_spec("edges: 4 : 0-1 , 2-3").unwrap();
        assert_eq!(b.edges(), [(0, 1), (2, 3)]);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_graph_spec("K3+X2") {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 3);
                assert!(message.contains("unknown graph family"));
            }
            other => panic!("{other:?}"),
        }
        match parse_graph_spec("C2") {
            Err(Error::Parse { position: 0, message }) => assert!(message.contains("n >= 3")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_graph_spec("K"), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(parse_graph_spec("2P2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph_spec("edges:3:0-3"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph_spec("edges:3:1-1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph_spec("K3 K3"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph_spec(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph_spec("E20+E10"),
            Err(Error::Capacity { order: 30, .. })
        ));
    }

    #[test]
    fn edge_list_files() {
        let g = parse_edge_list("5\n0 4\n").unwrap();
        assert_eq!(g, parse_graph_spec("edges:5:0-4").unwrap());
        let g = parse_edge_list("# a triangle\n3\n0 1\n1 2\n\n2 0 # closing\n").unwrap();
        assert_eq!(g, make_family(Complete, 3).unwrap());
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3\n0 1 2\n").is_err());
        assert!(parse_edge_list("3\n0 x\n").is_err());
    }
}
