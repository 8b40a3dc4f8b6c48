"""mtsem URL Configuration

No routes are served; tests swap in their own urlconf.
"""

urlpatterns = []
