//! Holds the `acceptance` test target; it runs after every other package's tests.
