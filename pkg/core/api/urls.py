from django.urls import include, path
from rest_framework.routers import DefaultRouter

from .views import ClassifyViewSet, DecideViewSet, StoredCertificateViewSet, WitnessViewSet

router = DefaultRouter()
router.register(r'classify', ClassifyViewSet, basename='classify')
router.register(r'decide', DecideViewSet, basename='decide')
router.register(r'witness', WitnessViewSet, basename='witness')
router.register(r'certificates', StoredCertificateViewSet, basename='certificate')

urlpatterns = [
    path('', include(router.urls)),
]
