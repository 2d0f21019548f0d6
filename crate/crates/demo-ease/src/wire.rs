//! Low-level binary encoding shared by the buffer and checkpoint formats.
//!
//! All scalars are little-endian; floats are 64-bit IEEE-754, so round trips
//! are bit-exact.

use std::io::{Read, Write};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum WireError {
    #[error("bad magic: expected {expected:?}, found {found:?}")]
    BadMagic { expected: [u8; 4], found: [u8; 4] },
    #[error("version mismatch: file has version {found}, reader supports version {supported}")]
    VersionMismatch { found: u32, supported: u32 },
    #[error("truncated file: {0}")]
    Truncated(String),
    #[error("invalid field: {0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn write_magic<W: Write>(w: &mut W, magic: &[u8; 4]) -> Result<(), WireError> {
    w.write_all(magic)?;
    Ok(())
}

pub fn write_u8<W: Write>(w: &mut W, v: u8) -> Result<(), WireError> {
    w.write_all(&[v])?;
    Ok(())
}

pub fn write_u32<W: Write>(w: &mut W, v: u32) -> Result<(), WireError> {
    w.write_all(&v.to_le_bytes())?;
    Ok(())
}

pub fn write_u64<W: Write>(w: &mut W, v: u64) -> Result<(), WireError> {
    w.write_all(&v.to_le_bytes())?;
    Ok(())
}

pub fn write_f64<W: Write>(w: &mut W, v: f64) -> Result<(), WireError> {
    w.write_all(&v.to_le_bytes())?;
    Ok(())
}

pub fn write_f64_slice<W: Write>(w: &mut W, vs: &[f64]) -> Result<(), WireError> {
    for v in vs {
        write_f64(w, *v)?;
    }
    Ok(())
}

fn read_exact<R: Read, const N: usize>(r: &mut R, what: &str) -> Result<[u8; N], WireError> {
    let mut buf = [0u8; N];
    r.read_exact(&mut buf)
        .map_err(|_| WireError::Truncated(format!("while reading {what}")))?;
    Ok(buf)
}

/// Read and validate the 4-byte magic and the u32 version that follows it.
pub fn read_header<R: Read>(
    r: &mut R,
    expected_magic: &[u8; 4],
    supported_version: u32,
) -> Result<(), WireError> {
    let found: [u8; 4] = read_exact(r, "magic")?;
    if &found != expected_magic {
        return Err(WireError::BadMagic {
            expected: *expected_magic,
            found,
        });
    }
    let version = read_u32(r, "version")?;
    if version != supported_version {
        return Err(WireError::VersionMismatch {
            found: version,
            supported: supported_version,
        });
    }
    Ok(())
}

pub fn read_u8<R: Read>(r: &mut R, what: &str) -> Result<u8, WireError> {
    Ok(read_exact::<R, 1>(r, what)?[0])
}

pub fn read_u32<R: Read>(r: &mut R, what: &str) -> Result<u32, WireError> {
    Ok(u32::from_le_bytes(read_exact(r, what)?))
}

pub fn read_u64<R: Read>(r: &mut R, what: &str) -> Result<u64, WireError> {
    Ok(u64::from_le_bytes(read_exact(r, what)?))
}

pub fn read_f64<R: Read>(r: &mut R, what: &str) -> Result<f64, WireError> {
    Ok(f64::from_le_bytes(read_exact(r, what)?))
}

pub fn read_f64_vec<R: Read>(r: &mut R, n: usize, what: &str) -> Result<Vec<f64>, WireError> {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(read_f64(r, what)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    #[test]
    fn header_round_trip() {
        let mut buf = Vec::new();
        write_magic(&mut buf, b"DEZB").unwrap();
        write_u32(&mut buf, 1).unwrap();
        read_header(&mut Cursor::new(&buf), b"DEZB", 1).unwrap();
    }

    #[test]
    fn bad_magic_is_reported() {
        let mut buf = Vec::new();
        write_magic(&mut buf, b"NOPE").unwrap();
        write_u32(&mut buf, 1).unwrap();
        let err = read_header(&mut Cursor::new(&buf), b"DEZB", 1).unwrap_err();
        assert!(matches!(err, WireError::BadMagic { .. }));
    }

    #[test]
    fn version_mismatch_names_both_versions() {
        let mut buf = Vec::new();
        write_magic(&mut buf, b"DEZB").unwrap();
        write_u32(&mut buf, 2).unwrap();
        let err = read_header(&mut Cursor::new(&buf), b"DEZB", 1).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains('2') && msg.contains('1'), "message: {msg}");
    }

    #[test]
    fn truncation_is_detected() {
        let buf = vec![b'D', b'E'];
        let err = read_header(&mut Cursor::new(&buf), b"DEZB", 1).unwrap_err();
        assert!(matches!(err, WireError::Truncated(_)));
    }

    #[test]
    fn f64_round_trip_is_bit_exact() {
        let values = [0.1, -0.0, f64::MIN_POSITIVE, 1.0 / 3.0, 1e300];
        let mut buf = Vec::new();
        write_f64_slice(&mut buf, &values).unwrap();
        let mut c = Cursor::new(&buf);
        for v in values {
            let r = read_f64(&mut c, "v").unwrap();
            assert_eq!(v.to_bits(), r.to_bits());
        }
    }
}
