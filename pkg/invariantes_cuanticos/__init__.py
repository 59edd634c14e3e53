# Paquete invariantes_cuanticos
