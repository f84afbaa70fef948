use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::Result;
use crate::partition::{enumerate_partitions, Partition};
use crate::thickness::ThicknessProfile;
use crate::zones::{first_occurrences, FirstOccurrenceTable};

pub const FIRST_OCCURRENCE_FILE: &str = "first_occurrences.csv";
pub const SUMMARY_FILE: &str = "summary.csv";
pub const MAX_LOCI_FILE: &str = "max_loci.json";

/// The three range-level tables, rendered as text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tables {
    pub first_occurrence: FirstOccurrenceTable,
    pub first_occurrence_csv: String,
    /// `n,p_n,tau_max,max_locus_size` per `n`.
    pub summary_csv: String,
    /// Members of `M_n` at every first-occurrence `n`.
    pub max_loci_json: String,
}

#[derive(Serialize)]
struct LocusEntry {
    r: usize,
    n: usize,
    tau_max: usize,
    size: usize,
    members: Vec<Partition>,
}

/// `profiles[i]` must be the profile for `n = i + 1`.
pub fn export_tables(profiles: &[ThicknessProfile]) -> Result<Tables> {
    let first_occurrence = first_occurrences(profiles)?;

    let mut summary_csv = String::from("n,p_n,tau_max,max_locus_size\n");
    for p in profiles {
        summary_csv.push_str(&format!(
            "{},{},{},{}\n",
            p.n(),
            p.vertex_count(),
            p.tau_max(),
            p.max_locus().len()
        ));
    }

    let mut loci = Vec::new();
    for (&r, &n) in &first_occurrence.entries {
        let p = &profiles[n - 1];
        let vertices = enumerate_partitions(n)?;
        loci.push(LocusEntry {
            r,
            n,
            tau_max: p.tau_max(),
            size: p.max_locus().len(),
            members: p.max_locus().iter().map(|&v| vertices[v].clone()).collect(),
        });
    }
    #[derive(Serialize)]
    struct Loci {
        range_max: usize,
        entries: Vec<LocusEntry>,
    }
    let max_loci_json = serde_json::to_string_pretty(&Loci {
        range_max: first_occurrence.range_max,
        entries: loci,
    })?;

    Ok(Tables {
        first_occurrence_csv: first_occurrence.to_csv(),
        first_occurrence,
        summary_csv,
        max_loci_json,
    })
}

impl Tables {
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        fs::write(dir.join(FIRST_OCCURRENCE_FILE), &self.first_occurrence_csv)?;
        fs::write(dir.join(SUMMARY_FILE), &self.summary_csv)?;
        fs::write(dir.join(MAX_LOCI_FILE), format!("{}\n", self.max_loci_json))?;
        Ok(())
    }
}
