#include "paralab/common.hpp"
