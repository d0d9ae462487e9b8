//---------------------------------------------------------------------------//
//! \file errors.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace qcompton
{
//---------------------------------------------------------------------------//
//! Base class for all library errors.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Outgoing photon is above the absolute kinematic ceiling (p.k <= k.k').
class KinematicallyForbidden : public Error
{
  public:
    using Error::Error;
};

//! Special-function input outside the documented accuracy contract.
class OutOfContract : public Error
{
  public:
    using Error::Error;
};

//! Photon statistics with vanishing normalization integral.
class NonNormalizable : public Error
{
  public:
    using Error::Error;
};

//! Harmonic sum hit its hard cap before reaching the relative tolerance.
class TruncationNotConverged : public Error
{
  public:
    TruncationNotConverged(std::string const& what, int last_order)
        : Error(what), last_order_(last_order)
    {
    }

    int last_order() const noexcept { return last_order_; }

  private:
    int last_order_;
};

//! Configuration schema violation; carries the dotted path of the offending key.
class ConfigError : public Error
{
  public:
    ConfigError(std::string path, std::string const& message)
        : Error(path + ": " + message), path_(std::move(path))
    {
    }

    std::string const& path() const noexcept { return path_; }

  private:
    std::string path_;
};

//---------------------------------------------------------------------------//
}  // namespace qcompton
