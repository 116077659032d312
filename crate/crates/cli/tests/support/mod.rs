pub mod exit_codes;
