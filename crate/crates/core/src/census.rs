//! Exhaustive classification of all tuples up to a modulus, streamed as JSON lines.

use std::io::{self, Write};

use rayon::prelude::*;

use crate::classify::{classify, ClassificationReport};
use crate::words::{canonical_rep, ParamTuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub n_max: u32,
    /// Keep one tuple per orbit: the one whose word is the canonical representative.
    pub dedup: bool,
    /// Worker threads; 1 classifies on the calling thread.
    pub jobs: usize,
}

impl CensusOptions {
    pub fn new(n_max: u32) -> Self {
        CensusOptions { n_max, dedup: false, jobs: 1 }
    }
}

fn tuples(n: u32, dedup: bool) -> Vec<ParamTuple> {
    ParamTuple::all_with_modulus(n).filter(|t| !dedup || canonical_rep(&t.word()) == t.word()).collect()
}

/// Reports in `(n, j, k, l)` order regardless of `jobs`.
pub fn census(opts: &CensusOptions) -> io::Result<Vec<ClassificationReport>> {
    let mut out = Vec::new();
    run(opts, |r| {
        out.push(r);
        Ok(())
    })?;
    Ok(out)
}

/// Streams one JSON line per report into `sink`; returns the number of lines.
pub fn write_census<W: Write>(opts: &CensusOptions, sink: &mut W) -> io::Result<usize> {
    let mut count = 0;
    run(opts, |r| {
        serde_json::to_writer(&mut *sink, &r.record())?;
        sink.write_all(b"\n")?;
        count += 1;
        Ok(())
    })?;
    sink.flush()?;
    Ok(count)
}

fn run(opts: &CensusOptions, mut emit: impl FnMut(ClassificationReport) -> io::Result<()>) -> io::Result<()> {
    let pool = if opts.jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.jobs)
                .build()
                .map_err(|e| io::Error::new(io::ErrorKind::Other, e))?,
        )
    } else {
        None
    };
    for n in 1..=opts.n_max {
        let ts = tuples(n, opts.dedup);
        let reports: Vec<ClassificationReport> = match &pool {
            Some(pool) => pool.install(|| ts.par_iter().map(classify).collect()),
            None => ts.iter().map(classify).collect(),
        };
        for r in reports {
            emit(r)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::CensusRecord;
    use std::collections::BTreeSet;

    #[test]
    fn counts() {
        let one = census(&CensusOptions::new(1)).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].finite && one[0].predicted_order == Some(4));
        assert_eq!(census(&CensusOptions::new(5)).unwrap().len(), 225);
    }

    #[test]
    fn json_lines_parse_back() {
        let mut buf = Vec::new();
        assert_eq!(write_census(&CensusOptions::new(4), &mut buf).unwrap(), 1 + 8 + 27 + 64);
        let text = String::from_utf8(buf).unwrap();
        for line in text.lines() {
            let rec: CensusRecord = serde_json::from_str(line).unwrap();
            assert!(rec.n <= 4);
        }
    }

    #[test]
    fn parallel_output_is_identical() {
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_census(&CensusOptions::new(7), &mut a).unwrap();
        write_census(&CensusOptions { jobs: 3, ..CensusOptions::new(7) }, &mut b).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn two_nonsolvable_orbits_at_six() {
        let reports = census(&CensusOptions { dedup: true, ..CensusOptions::new(6) }).unwrap();
        let big: Vec<String> = reports
            .iter()
            .filter(|r| r.tuple.n == 6 && r.finite && r.structure_note.starts_with("nonsolvable"))
            .map(|r| r.iso_type.unwrap().to_string())
            .collect();
        assert_eq!(big.len(), 2);
        assert_eq!(big.into_iter().collect::<BTreeSet<_>>(), ["I6'", "I6''"].into_iter().map(String::from).collect());
        let dedup_count = reports.len();
        assert!(dedup_count < census(&CensusOptions::new(6)).unwrap().len());
    }
}
