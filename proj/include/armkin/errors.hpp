#pragma once

#include <stdexcept>
#include <string>

namespace armkin {

/// Base for every failure raised by the kinematics core.
class KinematicsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite input, out-of-limit angle, or violated type invariant.
class DomainError : public KinematicsError {
public:
    using KinematicsError::KinematicsError;
};

/// Target lies outside the triangle the shoulder/elbow links can close.
class ReachabilityError : public KinematicsError {
public:
    using KinematicsError::KinematicsError;
};

/// A division by a zero-length side (b = 0).
class SingularityError : public KinematicsError {
public:
    using KinematicsError::KinematicsError;
};

} // namespace armkin
