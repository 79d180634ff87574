pub mod criterion {
    //! Re-exports the criterion API so the bench targets depend on one name.

    pub use criterion::*;
}
