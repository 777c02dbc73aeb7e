# Config module for oracle, rendering and application settings
