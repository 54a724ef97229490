use crate::error::{Error, ParseErrorKind, Result};
use crate::graph::{Graph, GraphKind};
use crate::signed::Signature;

fn well_formed_vertex(g: &Graph, name: &str) -> bool {
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());
    match g.kind() {
        GraphKind::Petersen { .. } => {
            name.len() > 1 && matches!(&name[..1], "u" | "v") && digits(&name[1..])
        }
        GraphKind::Generic => digits(name),
    }
}

/// Parses a comma-separated list of edge names such as `u0-u1, v2-v3`.
///
/// Whitespace is ignored and either endpoint may come first. Errors carry
/// the offending token, its 0-based index and its byte offset in `text`.
pub fn parse_signature(text: &str, g: &Graph) -> Result<Signature> {
    if text.trim().is_empty() {
        return Ok(Signature::empty(g));
    }
    let mut bits = 0u64;
    let mut offset = 0;
    for (index, raw) in text.split(',').enumerate() {
        let start = offset + (raw.len() - raw.trim_start().len());
        offset += raw.len() + 1;
        let token: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        let fail = |kind| Error::Parse {
            kind,
            token: token.clone(),
            index,
            offset: start,
        };
        let (a, b) = token
            .split_once('-')
            .filter(|(a, b)| well_formed_vertex(g, a) && well_formed_vertex(g, b))
            .ok_or_else(|| fail(ParseErrorKind::Malformed))?;
        let e = g
            .vertex_by_name(a)
            .zip(g.vertex_by_name(b))
            .and_then(|(a, b)| g.edge_between(a, b))
            .ok_or_else(|| fail(ParseErrorKind::UnknownEdge))?;
        if bits & (1 << e) != 0 {
            return Err(fail(ParseErrorKind::Duplicate));
        }
        bits |= 1 << e;
    }
    Ok(Signature::from_raw(g, bits))
}

/// Inverse of [`parse_signature`].
pub fn render_signature(sig: &Signature, g: &Graph) -> String {
    sig.render(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_petersen;
    use proptest::prelude::*;

    fn kind_of(r: Result<Signature>) -> (ParseErrorKind, usize, usize) {
        match r {
            Err(Error::Parse { kind, index, offset, .. }) => (kind, index, offset),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_names() {
        let g = build_petersen(5, 1).unwrap();
        let sig = parse_signature("u0-u1, v1-v2", &g).unwrap();
        assert_eq!(sig.neg_edges().iter().collect::<Vec<_>>(), vec![0, 6]);
        assert_eq!(parse_signature("v2 - v1 ,u1-u0", &g).unwrap(), sig);
        assert!(parse_signature("", &g).unwrap().is_empty());
        assert!(parse_signature("  ", &g).unwrap().is_empty());
        assert_eq!(parse_signature("v3-u3", &g).unwrap().neg_edges().iter().next(), Some(13));
    }

    #[test]
    fn reports_positions() {
        let g = build_petersen(5, 1).unwrap();
        assert_eq!(kind_of(parse_signature("u0-u9", &g)), (ParseErrorKind::UnknownEdge, 0, 0));
        assert_eq!(kind_of(parse_signature("u0-u1, u0-u2", &g)), (ParseErrorKind::UnknownEdge, 1, 7));
        assert_eq!(kind_of(parse_signature("u0-u1,u1-u0", &g)), (ParseErrorKind::Duplicate, 1, 6));
        assert_eq!(kind_of(parse_signature("u0-u1,,v0-v1", &g)), (ParseErrorKind::Malformed, 1, 6));
        assert_eq!(kind_of(parse_signature("u0u1", &g)), (ParseErrorKind::Malformed, 0, 0));
        assert_eq!(kind_of(parse_signature("w0-u1", &g)), (ParseErrorKind::Malformed, 0, 0));
        assert_eq!(kind_of(parse_signature("u0-u1,", &g)), (ParseErrorKind::Malformed, 1, 6));
        assert_eq!(kind_of(parse_signature("u+1-u2", &g)), (ParseErrorKind::Malformed, 0, 0));
    }

    #[test]
    fn generic_graph_names() {
        let g = Graph::cycle(4).unwrap();
        let sig = parse_signature("0-1,3-0", &g).unwrap();
        assert_eq!(sig.len(), 2);
        assert_eq!(parse_signature(&render_signature(&sig, &g), &g).unwrap(), sig);
        assert_eq!(kind_of(parse_signature("0-2", &g)).0, ParseErrorKind::UnknownEdge);
    }

    proptest! {
        #[test]
        fn render_round_trips(n in prop::sample::select(vec![3usize, 5, 7, 9]), bits in any::<u64>()) {
            let g = build_petersen(n, 1).unwrap();
            let sig = Signature::from_raw(&g, bits & g.all_edges().0);
            prop_assert_eq!(parse_signature(&render_signature(&sig, &g), &g).unwrap(), sig);
        }
    }
}
