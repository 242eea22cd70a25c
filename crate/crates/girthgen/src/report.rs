//! Per-graph property reports.

use std::fmt;

use girthgen_core::analysis::{
    has_dominating_cycle_within, has_petersen_colouring, is_hypohamiltonian, is_strong_snark,
    oddness, total_chromatic_number,
};
use girthgen_core::canon::canonical_form;
use girthgen_core::colour::{chromatic_index, cyclic_edge_connectivity, is_snark};
use girthgen_core::metrics::girth;
use girthgen_core::CubicGraph;

use crate::graph6;

/// Cyclic edge connectivity is reported up to this value.
pub const CYCLIC_CONNECTIVITY_CAP: usize = 6;

/// Which of the expensive properties to compute.
#[derive(Clone, Copy, Debug)]
pub struct Selection {
    pub oddness: bool,
    pub hypohamiltonian: bool,
    pub strong: bool,
    pub dominating_cycle: bool,
    pub total_colouring: bool,
    pub petersen_colouring: bool,
    /// Node budget of the dominating cycle search.
    pub dominating_budget: u64,
}

impl Selection {
    pub fn all() -> Self {
        Selection {
            oddness: true,
            hypohamiltonian: true,
            strong: true,
            dominating_cycle: true,
            total_colouring: true,
            petersen_colouring: true,
            dominating_budget: 1_000_000,
        }
    }

    pub fn none() -> Self {
        Selection {
            oddness: false,
            hypohamiltonian: false,
            strong: false,
            dominating_cycle: false,
            total_colouring: false,
            petersen_colouring: false,
            dominating_budget: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    /// graph6 line of the canonical labelling.
    pub certificate: String,
    pub order: usize,
    pub girth: usize,
    pub chromatic_index: u8,
    /// Capped at [`CYCLIC_CONNECTIVITY_CAP`].
    pub cyclic_connectivity: usize,
    pub snark: bool,
    pub oddness: Option<usize>,
    pub hypohamiltonian: Option<bool>,
    pub strong: Option<bool>,
    /// `Some(None)` when the search ran out of budget.
    pub dominating_cycle: Option<Option<bool>>,
    pub total_chromatic_number: Option<u8>,
    pub petersen_colouring: Option<bool>,
}

pub fn analyze(g: &CubicGraph, sel: Selection) -> Report {
    let canon = canonical_form(g, None).canonical_graph(g);
    Report {
        certificate: graph6::encode(&canon),
        order: g.order(),
        girth: girth(g),
        chromatic_index: chromatic_index(g),
        cyclic_connectivity: cyclic_edge_connectivity(g, CYCLIC_CONNECTIVITY_CAP),
        snark: is_snark(g),
        oddness: sel.oddness.then(|| oddness(g)).flatten(),
        hypohamiltonian: sel.hypohamiltonian.then(|| is_hypohamiltonian(g)),
        strong: sel.strong.then(|| is_strong_snark(g)),
        dominating_cycle: sel
            .dominating_cycle
            .then(|| has_dominating_cycle_within(g, sel.dominating_budget).ok()),
        total_chromatic_number: sel.total_colouring.then(|| total_chromatic_number(g)),
        petersen_colouring: sel.petersen_colouring.then(|| has_petersen_colouring(g)),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} order={} girth={} chromatic_index={} ",
            self.certificate, self.order, self.girth, self.chromatic_index
        )?;
        if self.cyclic_connectivity >= CYCLIC_CONNECTIVITY_CAP {
            write!(f, "cyclic_connectivity>={CYCLIC_CONNECTIVITY_CAP}")?;
        } else {
            write!(f, "cyclic_connectivity={}", self.cyclic_connectivity)?;
        }
        write!(f, " snark={}", yes_no(self.snark))?;
        if let Some(o) = self.oddness {
            write!(f, " oddness={o}")?;
        }
        if let Some(h) = self.hypohamiltonian {
            write!(f, " hypohamiltonian={}", yes_no(h))?;
        }
        if let Some(s) = self.strong {
            write!(f, " strong={}", yes_no(s))?;
        }
        match self.dominating_cycle {
            Some(Some(d)) => write!(f, " dominating_cycle={}", yes_no(d))?,
            Some(None) => write!(f, " dominating_cycle=undecided")?,
            None => {}
        }
        if let Some(t) = self.total_chromatic_number {
            write!(f, " total_chromatic_number={t}")?;
        }
        if let Some(p) = self.petersen_colouring {
            write!(f, " petersen_colouring={}", yes_no(p))?;
        }
        Ok(())
    }
}
