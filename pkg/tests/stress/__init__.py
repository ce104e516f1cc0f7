# Stress and performance tests
