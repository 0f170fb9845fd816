//! syllogos: a reasoning engine for quantified syllogistic statements.
//!
//! Two interpretations of "Q S are P" live side by side:
//!
//! * **Set-based** ([`set_engine`], [`numeric_engine`]): terms denote sets,
//!   quantifiers denote quantity relations between them. Validity is
//!   decided by exhaustive finite-model search; interval, fuzzy and
//!   exceptive variants compute the conclusion's quantity directly.
//! * **Conditional** ([`conditional_engine`]): statements are conditionals
//!   whose quantifier measures the strength of the subject-predicate link
//!   as a band on P(P|S); conclusions are generated by the min- and
//!   attachment-heuristics rather than proved.
//!
//! [`model`] holds the shared vocabulary (terms, quantifiers, statements,
//! syllogisms, finite models), [`parser`] the controlled grammar and corpus
//! file formats, [`transforms`] the singular-statement and
//! existential-import rewrites, and [`cli`] the thin command-line front end
//! (`syllogos check | conclude | compare | enumerate`).
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --example classical_validity       # Barbara and the model search
//! cargo run --example existential_import       # Barbari under three import policies
//! cargo run --example square_of_opposition     # classical vs modern LSO
//! cargo run --example intermediate_quantifiers # crisp "most" syllogisms
//! cargo run --example singular_statements      # Socrates as a singleton term
//! cargo run --example interval_syllogism       # proportion bounds, Fréchet fast path
//! cargo run --example fuzzy_qep                # quantifier extension principle
//! cargo run --example exceptive_syllogism      # "all but k" arithmetic, both modes
//! cargo run --example conditional_heuristics   # probabilistic reading + heuristics
//! cargo run --example mood_census              # all 256 classical moods
//! cargo run --example compare_interpretations  # both engines on one argument
//! ```
//!
//! Quick taste:
//!
//! ```
//! use syllogos::model::ImportPolicy;
//! use syllogos::parser::parse_syllogism_file;
//! use syllogos::set_engine::check_validity;
//!
//! let syllogism = parse_syllogism_file(
//!     "All human beings are mortal\n\
//!      All Greeks are human beings\n\
//!      ---\n\
//!      All Greeks are mortal\n",
//! )?;
//! let verdict = check_validity(&syllogism, ImportPolicy::NoImport, 6);
//! assert!(verdict.is_valid());
//! # Ok::<(), syllogos::parser::FileError>(())
//! ```

pub mod cli;
pub mod conditional_engine;
pub mod model;
pub mod numeric_engine;
pub mod parser;
pub mod set_engine;
pub mod transforms;
