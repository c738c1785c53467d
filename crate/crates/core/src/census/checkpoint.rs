//! Append-only census checkpoint.
//!
//! The file is a sequence of 16-byte records, each a pair of little-endian
//! `u64` values:
//!
//! * record 0 is the header `(MAGIC, config digest)`;
//! * a data record is `(canonical digest, fingerprint digest)` for one
//!   isomorphism class;
//! * `(SHARD_END, shard id)` closes a shard; its data records precede it.
//!
//! Records after the last shard marker belong to an interrupted shard and are
//! discarded on resume, so a shard is either fully recorded or recomputed.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{Read, Seek, SeekFrom, Write};
use std::path::Path;

use crate::error::{Error, Result};

pub const MAGIC: u64 = u64::from_le_bytes(*b"HGPCKPT1");
pub const SHARD_END: u64 = u64::MAX;
const RECORD: usize = 16;

pub type Pair = (u64, u64);

pub struct Checkpoint {
    file: File,
}

impl Checkpoint {
    /// Open or create the checkpoint; returns completed shards and their pairs.
    pub fn open(path: &Path, config_digest: u64) -> Result<(Self, BTreeMap<usize, Vec<Pair>>)> {
        let mut file = OpenOptions::new().read(true).write(true).create(true).truncate(false).open(path)?;
        let mut bytes = Vec::new();
        file.read_to_end(&mut bytes)?;
        if bytes.len() < RECORD {
            file.set_len(0)?;
            file.seek(SeekFrom::Start(0))?;
            file.write_all(&encode((MAGIC, config_digest)))?;
            file.sync_data()?;
            return Ok((Checkpoint { file }, BTreeMap::new()));
        }
        let (magic, digest) = decode(&bytes[..RECORD]);
        if magic != MAGIC {
            return Err(Error::Checkpoint(format!("{} is not a census checkpoint", path.display())));
        }
        if digest != config_digest {
            return Err(Error::Checkpoint(format!(
                "{} was written for a different census configuration",
                path.display()
            )));
        }
        let mut done = BTreeMap::new();
        let mut pending: Vec<Pair> = Vec::new();
        let mut valid_len = RECORD;
        let whole = bytes.len() / RECORD * RECORD;
        for (i, chunk) in bytes[RECORD..whole].chunks_exact(RECORD).enumerate() {
            let (a, b) = decode(chunk);
            if a == SHARD_END {
                let id = b as usize;
                if done.insert(id, std::mem::take(&mut pending)).is_some() {
                    return Err(Error::Checkpoint(format!("shard {id} recorded twice")));
                }
                valid_len = RECORD * (i + 2);
            } else {
                pending.push((a, b));
            }
        }
        if valid_len != bytes.len() {
            file.set_len(valid_len as u64)?;
        }
        file.seek(SeekFrom::End(0))?;
        Ok((Checkpoint { file }, done))
    }

    /// Append one finished shard and flush it.
    pub fn append_shard(&mut self, shard: usize, pairs: &[Pair]) -> Result<()> {
        let mut buf = Vec::with_capacity((pairs.len() + 1) * RECORD);
        for &p in pairs {
            if p.0 == SHARD_END {
                return Err(Error::DigestCollision("canonical digest equals the shard marker".into()));
            }
            buf.extend_from_slice(&encode(p));
        }
        buf.extend_from_slice(&encode((SHARD_END, shard as u64)));
        self.file.write_all(&buf)?;
        self.file.sync_data()?;
        Ok(())
    }
}

fn encode((a, b): Pair) -> [u8; RECORD] {
    let mut out = [0u8; RECORD];
    out[..8].copy_from_slice(&a.to_le_bytes());
    out[8..].copy_from_slice(&b.to_le_bytes());
    out
}

fn decode(chunk: &[u8]) -> Pair {
    let a = u64::from_le_bytes(chunk[..8].try_into().expect("8 bytes"));
    let b = u64::from_le_bytes(chunk[8..16].try_into().expect("8 bytes"));
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resume_discards_partial_shard() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.bin");
        {
            let (mut ck, done) = Checkpoint::open(&path, 7).unwrap();
            assert!(done.is_empty());
            ck.append_shard(0, &[(1, 2), (3, 4)]).unwrap();
            ck.append_shard(2, &[]).unwrap();
        }
        // Simulate a crash halfway through shard 1.
        let mut f = OpenOptions::new().append(true).open(&path).unwrap();
        f.write_all(&encode((9, 9))).unwrap();
        f.write_all(&[1, 2, 3]).unwrap();
        drop(f);

        let (mut ck, done) = Checkpoint::open(&path, 7).unwrap();
        assert_eq!(done.len(), 2);
        assert_eq!(done[&0], vec![(1, 2), (3, 4)]);
        assert!(done[&2].is_empty());
        assert_eq!(std::fs::metadata(&path).unwrap().len(), 16 * 5);
        ck.append_shard(1, &[(5, 6)]).unwrap();
        drop(ck);
        let (_, done) = Checkpoint::open(&path, 7).unwrap();
        assert_eq!(done[&1], vec![(5, 6)]);
    }

    #[test]
    fn rejects_foreign_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.bin");
        Checkpoint::open(&path, 1).unwrap();
        assert!(matches!(Checkpoint::open(&path, 2), Err(Error::Checkpoint(_))));
        std::fs::write(&path, [0u8; 32]).unwrap();
        assert!(matches!(Checkpoint::open(&path, 1), Err(Error::Checkpoint(_))));
    }
}
