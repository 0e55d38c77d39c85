#ifndef UNCERT_VERSION_HPP_
#define UNCERT_VERSION_HPP_

#define UNCERT_VERSION "0.1.0"

#endif  // UNCERT_VERSION_HPP_
