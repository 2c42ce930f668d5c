from scipy import constants

G0 = constants.g
SEA_LEVEL_PRESSURE = constants.atm
BAR = constants.bar
# Specific gas constant of dry air, J/(kg K).
R_AIR = constants.R / 28.9644e-3
