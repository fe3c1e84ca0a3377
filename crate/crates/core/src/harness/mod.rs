pub mod enumerate;
pub mod lemmas;
pub mod search;
pub mod stats;
