//! Structure of monochromatic components: contracting sets, extremal
//! colourings, bridges and the component selection procedure.

mod bridges;
mod contracting;
mod extremal;
mod selection;
mod verify;

pub use bridges::{admits_bridges, check_bridge, BridgeWitness};
pub use contracting::{contracting_sets, contracting_sets_by_size, is_contracting, minimum_contracting_set};
pub use extremal::{check_extremal_report, detect_extremal, BipartiteWitness, ExtremalKind, ExtremalReport, FourCycleWitness};
pub use selection::{find_components, select_components, ComponentSelection, ComponentsOutcome, SelectionRoute};
pub use verify::{check_selection, PropertyFlags};
