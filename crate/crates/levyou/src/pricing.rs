//! Placeholder; implemented in a later layer.
