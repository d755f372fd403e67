#ifndef HQL_VERSION_HPP
#define HQL_VERSION_HPP

#define HQL_VERSION "0.1.0"

#endif
