#pragma once

#include "rootcoh/core.hpp"
#include "rootcoh/simple_type.hpp"
#include "rootcoh/root_system.hpp"
#include "rootcoh/weyl.hpp"
#include "rootcoh/weight_multiset.hpp"
#include "rootcoh/wms_cache.hpp"
#include "rootcoh/exterior.hpp"
#include "rootcoh/vanishing.hpp"
#include "rootcoh/nonvanishing.hpp"
#include "rootcoh/table.hpp"
#include "rootcoh/serialize.hpp"
#include "rootcoh/verify.hpp"
