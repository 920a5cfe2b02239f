//! Snake extensions over `M_n(F)`: a Hamiltonian path on the matrices
//! supported in `I_{k,l}` is widened to one on `I_{k,l} + (k,l)` by
//! appending rows `B_j + x E_{k,l}` for every nonzero scalar `x`.

use crate::ring::{Elem, Ring};

use super::{EdgeWriter, HamCycle, HamError, HamMethod, HamNote, HamPath, MatrixIndexSet};

fn field_parts(ring: &Ring) -> Result<(usize, &Ring), HamError> {
    match ring.matrix_parts() {
        Some((n, base)) if base.is_field() => Ok((n, base)),
        _ => Err(HamError::Precondition(format!("{} is not a matrix ring over a field", ring.spec()))),
    }
}

/// Checks that `path` starts at 0 and covers exactly `A_{k,l}`.
fn check_layer(ring: &Ring, path: &HamPath, pos: MatrixIndexSet) -> Result<(), HamError> {
    if path.seq.first() != Some(&ring.zero()) {
        return Err(HamError::Precondition("path must start at 0".into()));
    }
    let mut seq = path.seq.clone();
    seq.sort_unstable();
    if seq != pos.a_members(ring) {
        return Err(HamError::Precondition(format!("path does not cover A_{{{},{}}}", pos.k, pos.l)));
    }
    Ok(())
}

fn nonzero_scalars(base: &Ring) -> Vec<Elem> {
    base.elements().filter(|&x| x != base.zero()).collect()
}

fn check_coverage(ring: &Ring, out: &[Elem], pos: MatrixIndexSet) -> Result<(), HamError> {
    let mut seq = out.to_vec();
    seq.sort_unstable();
    if seq != pos.a_bar_members(ring) {
        return Err(HamError::EndpointContract(format!(
            "extension at ({},{}) does not cover the next layer",
            pos.k, pos.l
        )));
    }
    Ok(())
}

pub fn extend_layer_char2(ring: &Ring, path: &HamPath, pos: MatrixIndexSet) -> Result<HamPath, HamError> {
    let (_, base) = field_parts(ring)?;
    if base.characteristic() != 2 {
        return Err(HamError::Precondition("characteristic must be 2".into()));
    }
    check_layer(ring, path, pos)?;
    let end = *path.seq.last().unwrap();
    if !pos.in_c_under(ring, end, base.zero()) {
        return Err(HamError::Precondition(format!("path end {} is not in the reduced zero class", ring.label(end))));
    }
    let bs = &path.seq[1..];
    let scalars = nonzero_scalars(base);
    let mut w = EdgeWriter::resume(ring, path.seq.clone(), "char-2 snake");
    for (row, &x) in scalars.iter().enumerate() {
        let e = pos.scaled_unit(ring, x);
        let cells = std::iter::once(e).chain(bs.iter().map(|&b| ring.add(b, e)));
        if row % 2 == 0 {
            for v in cells.collect::<Vec<_>>().into_iter().rev() {
                w.push(v)?;
            }
        } else {
            for v in cells {
                w.push(v)?;
            }
        }
    }
    let seq = w.finish();
    check_coverage(ring, &seq, pos)?;
    let end = *seq.last().unwrap();
    if !pos.in_c(ring, end, base.zero()) {
        return Err(HamError::EndpointContract(format!("char-2 endpoint {} not in C(0)", ring.label(end))));
    }
    if let Some(nx) = pos.next() {
        if !nx.in_c_under(ring, end, base.zero()) {
            return Err(HamError::EndpointContract(format!(
                "char-2 endpoint {} fails the reduced condition at ({},{})",
                ring.label(end),
                nx.k,
                nx.l
            )));
        }
    }
    Ok(HamPath { seq, notes: path.notes.clone() })
}

pub fn extend_layer_odd(ring: &Ring, path: &HamPath, pos: MatrixIndexSet) -> Result<HamPath, HamError> {
    let (_, base) = field_parts(ring)?;
    if base.characteristic() == 2 {
        return Err(HamError::Precondition("characteristic must be odd".into()));
    }
    check_layer(ring, path, pos)?;
    let end = *path.seq.last().unwrap();
    let scalars = nonzero_scalars(base);
    let c = if pos.is_empty() { scalars[0] } else { pos.entry(ring, end, 1, 1) };
    if c == base.zero() || !pos.in_c(ring, end, c) {
        return Err(HamError::Precondition(format!(
            "path end {} is not constant on a nonzero scalar",
            ring.label(end)
        )));
    }
    let t = path.seq.len() - 1;
    let mut notes = path.notes.clone();
    notes.push(HamNote::SnakeParity { k: pos.k, l: pos.l, t });

    // F^* as pairs {x, -x}, each led by its smaller id, the pair holding c last.
    let mut pairs: Vec<(Elem, Elem)> =
        scalars.iter().copied().filter(|&x| x < base.neg(x)).map(|x| (x, base.neg(x))).collect();
    let last = pairs.iter().position(|&(x, y)| x == c || y == c).unwrap();
    let held = pairs.remove(last);
    pairs.push(held);
    let m = pairs.len();
    // The endpoint is (-1)^m B_t - (-1)^t x_m E, so landing in C̄(d) needs
    // x_m = -(-1)^(t+m) c.
    let want = if (t + m).is_multiple_of(2) { base.neg(c) } else { c };
    let literal = if m.is_multiple_of(2) { c } else { base.neg(c) };
    let (a, b) = pairs[m - 1];
    pairs[m - 1] = if a == want { (a, b) } else { (b, a) };
    if want != literal && !pos.is_empty() {
        notes.push(HamNote::LastPairNegated { k: pos.k, l: pos.l });
    }

    let bs = &path.seq[1..];
    let signed = |s: bool, b: Elem| if s { b } else { ring.neg(b) };
    let mut w = EdgeWriter::resume(ring, path.seq.clone(), "odd snake");
    for (i, &(x, nx)) in pairs.iter().enumerate() {
        let plus = (i + 1) % 2 == 0;
        let (ex, enx) = (pos.scaled_unit(ring, x), pos.scaled_unit(ring, nx));
        let row = |head: Elem, even: Elem, odd: Elem| -> Vec<Elem> {
            std::iter::once(head)
                .chain(bs.iter().enumerate().map(|(j, &b)| {
                    let tail = if (j + 1) % 2 == 0 { even } else { odd };
                    ring.add(signed(plus, b), tail)
                }))
                .collect()
        };
        for v in row(ex, ex, enx).into_iter().rev() {
            w.push(v)?;
        }
        for v in row(enx, enx, ex) {
            w.push(v)?;
        }
    }
    let seq = w.finish();
    check_coverage(ring, &seq, pos)?;
    let end = *seq.last().unwrap();
    let d = pos.entry(ring, end, pos.k, pos.l);
    if d == base.zero() || !pos.in_c_bar(ring, end, d) {
        return Err(HamError::EndpointContract(format!(
            "odd endpoint {} not constant on the closed prefix",
            ring.label(end)
        )));
    }
    Ok(HamPath { seq, notes })
}

/// Hamiltonian cycle on `M_n(F)`, `n >= 2`, by running the snake extension
/// over every position in row-major order.
pub fn ham_matrix(ring: &Ring) -> Result<HamCycle, HamError> {
    let (n, base) = field_parts(ring)?;
    if n < 2 {
        return Err(HamError::Precondition("matrix size must be at least 2".into()));
    }
    let char2 = base.characteristic() == 2;
    let mut path = HamPath { seq: vec![ring.zero()], notes: Vec::new() };
    for pos in MatrixIndexSet::all(n) {
        path = if char2 { extend_layer_char2(ring, &path, pos)? } else { extend_layer_odd(ring, &path, pos)? };
    }
    let w = EdgeWriter::resume(ring, path.seq, "matrix closing edge");
    let seq = w.close()?;
    Ok(HamCycle { seq, method: HamMethod::Matrix, notes: path.notes })
}
