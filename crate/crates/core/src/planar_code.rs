//! Reading and writing the `planar_code` binary format.
//!
//! The stream starts with the ASCII header `>>planar_code<<`. Each graph is
//! one byte `n` followed, for every vertex `1..=n`, by its neighbours in
//! clockwise order as 1-based bytes and a terminating `0`.

use crate::graph::{GraphError, PlaneCubicGraph};
use std::io::{self, Read, Write};
use thiserror::Error;

pub const HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Error)]
pub enum PlanarCodeError {
    #[error("missing >>planar_code<< header")]
    MissingHeader,
    #[error("truncated planar_code stream in graph {graph}")]
    Truncated { graph: usize },
    #[error("graph {graph}: vertex {vertex} references neighbour {neighbor} > n")]
    BadNeighbor { graph: usize, vertex: usize, neighbor: usize },
    #[error("graph {graph}: {source}")]
    Invalid { graph: usize, source: GraphError },
    #[error("graph with {0} vertices does not fit the one-byte format")]
    TooLarge(usize),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Encodes one graph body (no header).
pub fn encode_graph(g: &PlaneCubicGraph) -> Result<Vec<u8>, PlanarCodeError> {
    let n = g.order();
    if n > 255 {
        return Err(PlanarCodeError::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + 4 * n);
    out.push(n as u8);
    for r in g.rotations() {
        out.extend(r.iter().map(|&w| (w + 1) as u8));
        out.push(0);
    }
    Ok(out)
}

pub fn encode<'a, I>(graphs: I) -> Result<Vec<u8>, PlanarCodeError>
where
    I: IntoIterator<Item = &'a PlaneCubicGraph>,
{
    let mut out = HEADER.to_vec();
    for g in graphs {
        out.extend(encode_graph(g)?);
    }
    Ok(out)
}

/// Parses one graph body starting at `bytes[*pos]`.
fn decode_body(bytes: &[u8], pos: &mut usize, graph: usize) -> Result<Vec<Vec<usize>>, PlanarCodeError> {
    let truncated = PlanarCodeError::Truncated { graph };
    let n = *bytes.get(*pos).ok_or(PlanarCodeError::Truncated { graph })? as usize;
    *pos += 1;
    let mut rot = Vec::with_capacity(n);
    for v in 0..n {
        let mut list = Vec::with_capacity(3);
        loop {
            let b = match bytes.get(*pos) {
                Some(&b) => b as usize,
                None => return Err(truncated),
            };
            *pos += 1;
            if b == 0 {
                break;
            }
            if b > n {
                return Err(PlanarCodeError::BadNeighbor { graph, vertex: v, neighbor: b });
            }
            list.push(b - 1);
        }
        rot.push(list);
    }
    Ok(rot)
}

/// Decodes a single header-less graph body, e.g. a canonical code.
pub fn decode_graph(body: &[u8]) -> Result<PlaneCubicGraph, PlanarCodeError> {
    let mut pos = 0;
    let rot = decode_body(body, &mut pos, 0)?;
    PlaneCubicGraph::from_rotation(rot).map_err(|source| PlanarCodeError::Invalid { graph: 0, source })
}

/// Raw rotation lists without validation.
pub fn decode_raw(bytes: &[u8]) -> Result<Vec<Vec<Vec<usize>>>, PlanarCodeError> {
    let body = bytes.strip_prefix(HEADER).ok_or(PlanarCodeError::MissingHeader)?;
    let mut pos = 0;
    let mut out = Vec::new();
    while pos < body.len() {
        out.push(decode_body(body, &mut pos, out.len())?);
    }
    Ok(out)
}

pub fn decode(bytes: &[u8]) -> Result<Vec<PlaneCubicGraph>, PlanarCodeError> {
    decode_raw(bytes)?
        .into_iter()
        .enumerate()
        .map(|(i, rot)| {
            PlaneCubicGraph::from_rotation(rot).map_err(|source| PlanarCodeError::Invalid { graph: i, source })
        })
        .collect()
}

pub fn read_from<R: Read>(mut r: R) -> Result<Vec<PlaneCubicGraph>, PlanarCodeError> {
    let mut buf = Vec::new();
    r.read_to_end(&mut buf)?;
    decode(&buf)
}

pub fn write_to<'a, W: Write, I>(mut w: W, graphs: I) -> Result<(), PlanarCodeError>
where
    I: IntoIterator<Item = &'a PlaneCubicGraph>,
{
    w.write_all(&encode(graphs)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn cube_bytes() {
        let bytes = encode([&cube()]).unwrap();
        assert!(bytes.starts_with(HEADER));
        let body = &bytes[HEADER.len()..];
        assert_eq!(body[0], 8);
        assert_eq!(&body[1..5], &[2, 5, 4, 0]);
        assert_eq!(body.len(), 1 + 8 * 4);
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let graphs = vec![k4(), cube(), prism(6), dodecahedron()];
        let bytes = encode(&graphs).unwrap();
        let back = decode(&bytes).unwrap();
        assert_eq!(back, graphs);
        assert_eq!(encode(&back).unwrap(), bytes);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode(b"nope"), Err(PlanarCodeError::MissingHeader)));
        let mut bytes = encode([&cube()]).unwrap();
        bytes.pop();
        assert!(matches!(decode(&bytes), Err(PlanarCodeError::Truncated { .. })));
        let mut bad = HEADER.to_vec();
        bad.extend_from_slice(&[4, 2, 3, 9, 0]);
        assert!(matches!(decode(&bad), Err(PlanarCodeError::BadNeighbor { .. })));
        let mut not_cubic = HEADER.to_vec();
        not_cubic.extend_from_slice(&[4, 2, 0, 1, 0, 4, 0, 3, 0]);
        assert!(matches!(decode(&not_cubic), Err(PlanarCodeError::Invalid { .. })));
    }

    #[test]
    fn canonical_code_is_a_planar_code_body() {
        let g = prism(5);
        let code = crate::graph::canonical_code(&g);
        let h = decode_graph(&code).unwrap();
        assert!(crate::graph::is_isomorphic(&g, &h));
        assert_eq!(encode_graph(&h).unwrap(), code);
    }
}
